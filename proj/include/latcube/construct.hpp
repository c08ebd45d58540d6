// latcube/construct.hpp — explicit integer cube witnesses.
//
// A witness for (m, d, n) is a d x n integer matrix whose rows are pairwise
// orthogonal and all have squared norm m: the edge frame of a d-cube anchored
// at the origin. Construction works from base cases with d <= 4 and grows d
// in steps of 4 by appending quaternion blocks on fresh coordinates.

#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "classify.hpp"

namespace latcube {

using LatticeVector = std::vector<Int>;

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: vector lengths differ");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int norm2(const LatticeVector& v) {
    Int s = 0;
    for (const Int& x : v) s += x * x;
    return s;
}

struct CubeWitness {
    Int m;  // squared side length
    int d = 1;
    int n = 1;
    std::vector<LatticeVector> rows;  // d rows of length n

    friend bool operator==(const CubeWitness& a, const CubeWitness& b) {
        return a.m == b.m && a.d == b.d && a.n == b.n && a.rows == b.rows;
    }
};

// The orthogonal frame (q, qi, qj, qk) of the quaternion q = a + bi + cj + dk,
// written in coordinates: four rows of squared norm a^2 + b^2 + c^2 + d^2.
inline CubeWitness quaternion_basis(const Int& a, const Int& b, const Int& c, const Int& d) {
    CubeWitness w;
    w.m = a * a + b * b + c * c + d * d;
    w.d = 4;
    w.n = 4;
    w.rows = {
        {a, b, c, d},
        {-b, a, d, -c},
        {-c, -d, a, b},
        {-d, c, -b, a},
    };
    return w;
}

// Base-case witness for d <= 4 in ambient dimension n = d + slack.
inline CubeWitness base_witness(const Int& m, int d, int slack) {
    if (d < 1 || d > 4) throw PreconditionViolated("base_witness: d must be in 1..4");
    if (slack < 0) throw PreconditionViolated("base_witness: negative slack");
    if (MembershipVerdict v = is_member(m, DimensionPair(d, d + slack)); !v.member)
        throw NotMember(std::move(v));
    const int n = d + slack;
    const auto pad = [n](LatticeVector row) {
        row.resize(static_cast<std::size_t>(n), Int(0));
        return row;
    };
    CubeWitness w;
    w.m = m;
    w.d = d;
    w.n = n;
    if (d == 1) {
        w.rows = {decompose_n_squares(m, n).terms};
    } else if (d == 2 && slack <= 1) {
        const auto& t = decompose_two_squares(m).terms;  // (a, b) with a <= b
        w.rows = {pad({t[0], t[1]}), pad({-t[1], t[0]})};
    } else if (d == 3 && slack == 0) {
        const Int s = int_sqrt(m).root;  // exact: this cell only admits squares
        w.rows = {{s, 0, 0}, {0, s, 0}, {0, 0, s}};
    } else {
        // Remaining cells take the leading rows of a quaternion frame.
        const auto& f = decompose_four_squares(m).terms;
        CubeWitness q = quaternion_basis(f[0], f[1], f[2], f[3]);
        for (int i = 0; i < d; ++i) w.rows.push_back(pad(std::move(q.rows[i])));
    }
    return w;
}

// Append a quaternion block on four fresh coordinates: a (d, n) witness
// becomes a (d + 4, n + 4) witness for the same m.
inline CubeWitness extend_by_quaternion_block(const CubeWitness& w) {
    const auto& f = decompose_four_squares(w.m).terms;
    CubeWitness q = quaternion_basis(f[0], f[1], f[2], f[3]);
    CubeWitness out;
    out.m = w.m;
    out.d = w.d + 4;
    out.n = w.n + 4;
    out.rows.reserve(static_cast<std::size_t>(out.d));
    for (const LatticeVector& row : w.rows) {
        LatticeVector r = row;
        r.resize(static_cast<std::size_t>(out.n), Int(0));
        out.rows.push_back(std::move(r));
    }
    for (LatticeVector& row : q.rows) {
        LatticeVector r(static_cast<std::size_t>(w.n), Int(0));
        for (Int& x : row) r.push_back(std::move(x));
        out.rows.push_back(std::move(r));
    }
    return out;
}

// Witness for any member (m, d, n); throws NotMember with the refutation
// otherwise. Layout: base block for d reduced mod 4 (residue in 1..4) in the
// leading coordinates, then one quaternion block per step of 4.
inline CubeWitness construct_witness(const Int& m, const DimensionPair& p) {
    if (MembershipVerdict v = is_member(m, p); !v.member) throw NotMember(std::move(v));
    const int r = (p.d - 1) % 4 + 1;
    CubeWitness w = base_witness(m, r, p.n - p.d);
    for (int blocks = (p.d - r) / 4; blocks > 0; --blocks) w = extend_by_quaternion_block(w);
    return w;
}

struct VerificationReport {
    bool valid = false;
    std::string structural_error;                      // empty when the shape is fine
    std::vector<Int> row_norm_minus_m;                 // norm^2 - m per row
    std::vector<std::tuple<int, int, Int>> pair_dots;  // (i, j, row_i . row_j) for i < j
};

// Checks the defining conditions; reports defects instead of throwing.
inline VerificationReport verify_witness(const CubeWitness& w) {
    VerificationReport rep;
    if (w.d < 1 || w.d > w.n) {
        rep.structural_error = "require 1 <= d <= n";
        return rep;
    }
    if (w.m < 0) {
        rep.structural_error = "m must be non-negative";
        return rep;
    }
    if (w.rows.size() != static_cast<std::size_t>(w.d)) {
        rep.structural_error = "expected " + std::to_string(w.d) + " rows, found " +
                               std::to_string(w.rows.size());
        return rep;
    }
    for (std::size_t i = 0; i < w.rows.size(); ++i) {
        if (w.rows[i].size() != static_cast<std::size_t>(w.n)) {
            rep.structural_error = "row " + std::to_string(i) + " has length " +
                                   std::to_string(w.rows[i].size()) + ", expected " +
                                   std::to_string(w.n);
            return rep;
        }
    }
    bool clean = true;
    for (const LatticeVector& row : w.rows) {
        rep.row_norm_minus_m.push_back(norm2(row) - w.m);
        clean = clean && rep.row_norm_minus_m.back() == 0;
    }
    for (int i = 0; i < w.d; ++i) {
        for (int j = i + 1; j < w.d; ++j) {
            rep.pair_dots.emplace_back(i, j, dot(w.rows[i], w.rows[j]));
            clean = clean && std::get<2>(rep.pair_dots.back()) == 0;
        }
    }
    rep.valid = clean;
    return rep;
}

// All 2^d vertices anchor + sum of a row subset, in binary-counter order
// (bit j of the counter selects row j).
inline std::vector<LatticeVector> expand_cube(const CubeWitness& w, const LatticeVector& anchor) {
    if (anchor.size() != static_cast<std::size_t>(w.n))
        throw DimensionMismatch("expand_cube: anchor length != n");
    if (w.d > 20) throw TooLarge("expand_cube: d > 20");
    if (w.rows.size() != static_cast<std::size_t>(w.d))
        throw DimensionMismatch("expand_cube: malformed witness");
    for (const LatticeVector& row : w.rows)
        if (row.size() != static_cast<std::size_t>(w.n))
            throw DimensionMismatch("expand_cube: malformed witness");
    const std::uint32_t count = std::uint32_t(1) << w.d;
    std::vector<LatticeVector> vertices;
    vertices.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        LatticeVector v = anchor;
        for (int j = 0; j < w.d; ++j)
            if (mask >> j & 1)
                for (int k = 0; k < w.n; ++k) v[static_cast<std::size_t>(k)] += w.rows[j][k];
        vertices.push_back(std::move(v));
    }
    return vertices;
}

// ---------------------------------------------------------------------------
// Text serialization: header line "d n m", then d rows of n decimal entries
// separated by single spaces. Round-trips bit-exactly.

inline void write_witness(std::ostream& os, const CubeWitness& w) {
    os << w.d << ' ' << w.n << ' ' << w.m << '\n';
    for (const LatticeVector& row : w.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) os << ' ';
            os << row[k];
        }
        os << '\n';
    }
}

inline std::string witness_to_string(const CubeWitness& w) {
    std::ostringstream os;
    write_witness(os, w);
    return os.str();
}

namespace detail {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline Int parse_int_token(const Token& tok, std::size_t line_no) {
    const std::string& s = tok.text;
    std::size_t k = s[0] == '-' ? 1 : 0;
    bool ok = k < s.size();
    for (; ok && k < s.size(); ++k) ok = s[k] >= '0' && s[k] <= '9';
    if (!ok)
        throw ParseError("invalid integer '" + s + "' at line " + std::to_string(line_no) +
                             ", column " + std::to_string(tok.column),
                         line_no, tok.column);
    return Int(s);
}

}  // namespace detail

inline CubeWitness read_witness(std::istream& is) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(is, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
    }
    // Trailing blank lines are tolerated, blank lines elsewhere are not.
    while (!lines.empty() && detail::split_tokens(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError("empty witness file", 1);

    const auto header = detail::split_tokens(lines[0]);
    if (header.size() != 3)
        throw ParseError("header must be 'd n m', found " + std::to_string(header.size()) +
                             " tokens at line 1",
                         1, header.empty() ? 1 : header[0].column);
    CubeWitness w;
    const Int d_raw = detail::parse_int_token(header[0], 1);
    const Int n_raw = detail::parse_int_token(header[1], 1);
    if (d_raw < 1 || d_raw > 1'000'000 || n_raw < 1 || n_raw > 1'000'000)
        throw ParseError("header dimensions out of range at line 1", 1, header[0].column);
    w.d = static_cast<int>(d_raw);
    w.n = static_cast<int>(n_raw);
    w.m = detail::parse_int_token(header[2], 1);

    if (lines.size() != static_cast<std::size_t>(w.d) + 1)
        throw ParseError("expected " + std::to_string(w.d) + " rows after the header, found " +
                             std::to_string(lines.size() - 1),
                         lines.size() < static_cast<std::size_t>(w.d) + 1 ? lines.size() + 1
                                                                          : lines.size(),
                         1);
    for (int i = 0; i < w.d; ++i) {
        const std::size_t line_no = static_cast<std::size_t>(i) + 2;
        const auto toks = detail::split_tokens(lines[line_no - 1]);
        if (toks.size() != static_cast<std::size_t>(w.n))
            throw ParseError("row " + std::to_string(i) + " has " + std::to_string(toks.size()) +
                                 " entries, expected " + std::to_string(w.n) + " at line " +
                                 std::to_string(line_no),
                             line_no, toks.empty() ? 1 : toks[0].column);
        LatticeVector row;
        row.reserve(toks.size());
        for (const auto& t : toks) row.push_back(detail::parse_int_token(t, line_no));
        w.rows.push_back(std::move(row));
    }
    return w;
}

inline CubeWitness witness_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_witness(is);
}

}  // namespace latcube
