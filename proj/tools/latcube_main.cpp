// latcube command line front end.
//
// Every result is a single JSON object on stdout (census emits one object
// per line); diagnostics go to stderr. All numbers are printed as decimal
// strings so arbitrary-precision values survive any JSON consumer.
//
// Exit codes: 0 affirmative, 1 well-formed negative (non-member, not
// representable, invalid witness), 2 usage or parse errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <latcube.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace latcube;

namespace {

struct Options {
    bool pretty = false;
    int threads = 1;
    SearchBudget budget;
};

void emit(const json& j, const Options& opt) {
    std::cout << (opt.pretty ? j.dump(2) : j.dump()) << '\n';
}

Int parse_int_arg(const std::string& s, const std::string& what) {
    std::size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool ok = k < s.size();
    for (; ok && k < s.size(); ++k) ok = s[k] >= '0' && s[k] <= '9';
    if (!ok) throw PreconditionViolated(what + ": expected a decimal integer, got '" + s + "'");
    return Int(s);
}

Int parse_nonneg_arg(const std::string& s, const std::string& what) {
    Int v = parse_int_arg(s, what);
    if (v < 0) throw PreconditionViolated(what + ": must be non-negative");
    return v;
}

int parse_dim_arg(const std::string& s, const std::string& what) {
    Int v = parse_int_arg(s, what);
    if (v < 1 || v > 1'000'000)
        throw PreconditionViolated(what + ": must be in 1..1000000");
    return static_cast<int>(v);
}

std::string rat_str(const Rat& r) {
    const Int num(numerator(r)), den(denominator(r));
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

// operand of the printed identity check: parenthesize negatives and fractions
std::string check_operand(const Rat& r) {
    const std::string s = rat_str(r);
    return (r < 0 || s.find('/') != std::string::npos) ? "(" + s + ")" : s;
}

json witness_json(const CubeWitness& w) {
    json rows = json::array();
    for (const LatticeVector& row : w.rows) {
        json r = json::array();
        for (const Int& x : row) r.push_back(x.str());
        rows.push_back(std::move(r));
    }
    return json{{"d", std::to_string(w.d)},
                {"n", std::to_string(w.n)},
                {"m", w.m.str()},
                {"rows", std::move(rows)}};
}

CubeWitness witness_from_json(const json& j) {
    const json& w = j.contains("witness") ? j.at("witness") : j;
    CubeWitness out;
    out.d = static_cast<int>(parse_int_arg(w.at("d").get<std::string>(), "witness d"));
    out.n = static_cast<int>(parse_int_arg(w.at("n").get<std::string>(), "witness n"));
    out.m = parse_int_arg(w.at("m").get<std::string>(), "witness m");
    for (const json& row : w.at("rows")) {
        LatticeVector r;
        for (const json& x : row) r.push_back(parse_int_arg(x.get<std::string>(), "witness entry"));
        out.rows.push_back(std::move(r));
    }
    return out;
}

// Accepts the plain text format and, for convenience, the JSON emitted by
// `construct` (sniffed by a leading '{'); the round trip construct -> verify
// works on either representation.
CubeWitness load_witness_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
        ++i;
    if (i < text.size() && text[i] == '{') {
        // first line is the construct record; witness rows live inside it
        const std::size_t eol = text.find('\n', i);
        const std::string first = text.substr(i, eol == std::string::npos ? std::string::npos : eol - i);
        json j = json::parse(first, nullptr, false);
        if (j.is_discarded()) throw ParseError("invalid JSON witness in '" + path + "'", 1);
        try {
            return witness_from_json(j);
        } catch (const json::exception& e) {
            throw ParseError("JSON witness in '" + path + "' lacks fields: " + e.what(), 1);
        }
    }
    std::istringstream is(text);
    return read_witness(is);
}

json member_record(const char* command, const Int& m, const DimensionPair& p,
                   const MembershipVerdict& v) {
    json j{{"command", command},
           {"inputs",
            json{{"m", m.str()}, {"d", std::to_string(p.d)}, {"n", std::to_string(p.n)}}},
           {"member", v.member},
           {"descriptor", to_string(v.descriptor)}};
    if (!v.member) j["reason"] = v.reason();
    return j;
}

int cmd_classify(const std::vector<std::string>& args, const Options& opt) {
    const int d = parse_dim_arg(args[0], "d");
    const int n = parse_dim_arg(args[1], "n");
    const DimensionPair p(d, n);
    emit(json{{"command", "classify"},
              {"inputs", json{{"d", std::to_string(d)}, {"n", std::to_string(n)}}},
              {"descriptor", to_string(descriptor_for(p))},
              {"table", json{{"d_mod_4", std::to_string(d % 4)},
                             {"n_minus_d", std::to_string(n - d)}}}},
         opt);
    return 0;
}

int cmd_member(const std::vector<std::string>& args, const Options& opt) {
    const Int m = parse_nonneg_arg(args[0], "m");
    const DimensionPair p(parse_dim_arg(args[1], "d"), parse_dim_arg(args[2], "n"));
    const MembershipVerdict v = is_member(m, p);
    emit(member_record("member", m, p, v), opt);
    return v.member ? 0 : 1;
}

int cmd_construct(const std::vector<std::string>& args, const Options& opt) {
    const Int m = parse_nonneg_arg(args[0], "m");
    const DimensionPair p(parse_dim_arg(args[1], "d"), parse_dim_arg(args[2], "n"));
    const MembershipVerdict v = is_member(m, p);
    if (!v.member) {
        emit(member_record("construct", m, p, v), opt);
        return 1;
    }
    const CubeWitness w = construct_witness(m, p);
    if (!verify_witness(w).valid)
        throw std::logic_error("construct: witness failed self-verification");
    json j = member_record("construct", m, p, v);
    j["witness"] = witness_json(w);
    emit(j, opt);
    std::cout << witness_to_string(w);
    return 0;
}

int cmd_verify(const std::vector<std::string>& args, const Options& opt) {
    const CubeWitness w = load_witness_file(args[0]);
    const VerificationReport rep = verify_witness(w);
    json j{{"command", "verify"}, {"inputs", json{{"path", args[0]}}}, {"valid", rep.valid}};
    if (!rep.structural_error.empty()) {
        j["structural_error"] = rep.structural_error;
    } else {
        j["d"] = std::to_string(w.d);
        j["n"] = std::to_string(w.n);
        j["m"] = w.m.str();
        json norms = json::array();
        for (const Int& x : rep.row_norm_minus_m) norms.push_back(x.str());
        j["row_norm_minus_m"] = std::move(norms);
        json dots = json::array();
        for (const auto& [a, b, val] : rep.pair_dots)
            dots.push_back(json{{"i", std::to_string(a)},
                                {"j", std::to_string(b)},
                                {"dot", val.str()}});
        j["pair_dots"] = std::move(dots);
    }
    emit(j, opt);
    return rep.valid ? 0 : 1;
}

int cmd_decompose(const std::vector<std::string>& args, const Options& opt) {
    const Int m = parse_nonneg_arg(args[0], "m");
    const Int k_raw = parse_int_arg(args[1], "k");
    if (k_raw < 1 || k_raw > 1'000'000) throw PreconditionViolated("k: must be in 1..1000000");
    const int k = static_cast<int>(k_raw);
    json j{{"command", "decompose"},
           {"inputs", json{{"m", m.str()}, {"k", std::to_string(k)}}}};
    try {
        const SquareDecomposition dec = decompose_n_squares(m, k);
        j["representable"] = true;
        json terms = json::array();
        for (const Int& t : dec.terms) terms.push_back(t.str());
        j["terms"] = std::move(terms);
        emit(j, opt);
        return 0;
    } catch (const NotRepresentable& e) {
        j["representable"] = false;
        j["reason"] = e.what();
        emit(j, opt);
        return 1;
    }
}

int cmd_oracle(const std::vector<std::string>& args, const Options& opt) {
    const Int m = parse_nonneg_arg(args[0], "m");
    const DimensionPair p(parse_dim_arg(args[1], "d"), parse_dim_arg(args[2], "n"));
    const OracleVerdict v = oracle_is_member(m, p, opt.budget, opt.threads);
    json j{{"command", "oracle"},
           {"inputs",
            json{{"m", m.str()}, {"d", std::to_string(p.d)}, {"n", std::to_string(p.n)}}},
           {"member", v.member}};
    if (v.witness) j["witness"] = witness_json(*v.witness);
    emit(j, opt);
    return v.member ? 0 : 1;
}

int cmd_census(const std::vector<std::string>& args, const Options& opt) {
    const DimensionPair p(parse_dim_arg(args[0], "d"), parse_dim_arg(args[1], "n"));
    const Int m_max = parse_nonneg_arg(args[2], "m_max");
    for (const CensusRow& row : census(p, m_max, opt.budget, opt.threads)) {
        emit(json{{"m", row.m.str()},
                  {"member", row.member},
                  {"frames", std::to_string(row.frames)},
                  {"capped", row.capped}},
             opt);
    }
    return 0;
}

int cmd_witt(const std::vector<std::string>& args, const Options& opt) {
    LatticeVector v, w;
    for (int i = 0; i < 3; ++i) v.push_back(parse_int_arg(args[i], "v"));
    for (int i = 3; i < 6; ++i) w.push_back(parse_int_arg(args[i], "w"));
    const TwoSquareExtraction r = witt_extract_two_squares(v, w);
    const Int m = norm2(v);
    emit(json{{"command", "witt"},
              {"inputs",
               json{{"v", json::array({v[0].str(), v[1].str(), v[2].str()})},
                    {"w", json::array({w[0].str(), w[1].str(), w[2].str()})}}},
              {"m", m.str()},
              {"x", rat_str(r.x)},
              {"y", rat_str(r.y)},
              {"sign_flipped", r.sign_flipped},
              {"check", check_operand(r.x) + "^2+" + check_operand(r.y) + "^2=" + m.str()}},
         opt);
    return 0;
}

int cmd_extend(const std::vector<std::string>& args, const Options& opt) {
    const CubeWitness w = load_witness_file(args[0]);
    std::vector<RationalVector> rows;
    rows.reserve(w.rows.size());
    for (const LatticeVector& row : w.rows) rows.push_back(to_rational(row));
    const BasisExtension ext = gram_schmidt_extend(rows);
    json basis = json::array();
    for (const RationalVector& row : ext.basis) {
        json r = json::array();
        for (const Rat& x : row) r.push_back(rat_str(x));
        basis.push_back(std::move(r));
    }
    json residuals = json::array();
    for (const Rat& x : ext.residual_norms) residuals.push_back(rat_str(x));
    emit(json{{"command", "extend"},
              {"inputs", json{{"path", args[0]}}},
              {"d", std::to_string(w.d)},
              {"n", std::to_string(w.n)},
              {"basis", std::move(basis)},
              {"residual_norms", std::move(residuals)}},
         opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer cube frames in Z^n: classify, construct, verify, search"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    bool json_flag = true;
    std::string max_norm;
    app.add_flag("--json", json_flag, "one JSON object per result on stdout (default)");
    app.add_flag("--pretty", opt.pretty, "indent JSON output");
    app.add_option("--threads", opt.threads, "worker threads for the oracle search")
        ->check(CLI::Range(1, 256));
    app.add_option("--max-norm", max_norm, "search budget: largest admissible m");

    const struct {
        const char* name;
        const char* desc;
        int arity;
        int (*run)(const std::vector<std::string>&, const Options&);
    } commands[] = {
        {"classify", "descriptor of the side-length set for (d, n)", 2, cmd_classify},
        {"member", "does a d-cube of squared side m fit in Z^n", 3, cmd_member},
        {"construct", "build an explicit edge frame for (m, d, n)", 3, cmd_construct},
        {"verify", "check a witness file", 1, cmd_verify},
        {"decompose", "write m as a sum of k squares", 2, cmd_decompose},
        {"oracle", "exhaustive-search membership for (m, d, n)", 3, cmd_oracle},
        {"census", "oracle verdict and frame count for m = 0..m_max", 3, cmd_census},
        {"witt", "two-square extraction from an orthogonal pair in Z^3", 6, cmd_witt},
        {"extend", "complete a partial frame file to an orthogonal basis", 1, cmd_extend},
    };
    std::vector<std::vector<std::string>> args(std::size(commands));
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i].name, commands[i].desc);
        sub->add_option("args", args[i], "arguments")->expected(commands[i].arity);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (!max_norm.empty()) opt.budget.max_norm = parse_nonneg_arg(max_norm, "--max-norm");
        for (std::size_t i = 0; i < std::size(commands); ++i)
            if (app.got_subcommand(commands[i].name)) return commands[i].run(args[i], opt);
        std::cerr << "usage error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error (line " << e.line;
        if (e.column) std::cerr << ", column " << e.column;
        std::cerr << "): " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
