// latcube/oracle.hpp — ground truth by exhaustive search over Z^n.
//
// Enumerates every lattice vector of a given squared norm and every d-frame
// of mutually orthogonal such vectors, with no input from the classification
// table; the test suite plays the two routes against each other.
//
// Canonical-order convention: a frame is reported with its rows in strictly
// increasing lexicographic order, so each set of d rows is found exactly
// once. Sign and permutation symmetries of Z^n are NOT quotiented out; frame
// counts are raw counts under this convention. The degenerate m = 0 case is
// counted as the single all-zero frame.
//
// Search state lives in plain int64 coordinates: budgets cap the norm well
// below any overflow (|x_i| <= sqrt(m), so dot products stay under 8 * m).

#pragma once

#include <boost/dynamic_bitset.hpp>

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "construct.hpp"

namespace latcube {

struct SearchBudget {
    Int max_norm{60};
    int max_dim = 6;
    std::uint64_t max_frames = 1'000'000;
};

namespace detail {

inline const SearchBudget kDefaultBudget{};

constexpr int kEnumDimCap = 8;
constexpr std::int64_t kNormCap = std::int64_t(1) << 40;  // keeps int64 dots exact

using IVec = std::vector<std::int64_t>;
using Bits = boost::dynamic_bitset<std::uint64_t>;

inline std::int64_t isqrt64(std::int64_t m) {
    if (m < 2) return m;
    std::int64_t x = m, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + m / x) / 2;
    }
    return x;
}

inline std::int64_t dot64(const IVec& a, const IVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// All v in Z^n with |v|^2 == m, lexicographically increasing.
inline std::vector<IVec> enumerate_i64(std::int64_t m, int n) {
    std::vector<IVec> out;
    IVec cur(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, std::int64_t rem) -> void {
        if (pos == n - 1) {
            const std::int64_t s = isqrt64(rem);
            if (s * s != rem) return;
            if (s != 0) {
                cur[pos] = -s;
                out.push_back(cur);
            }
            cur[pos] = s;
            out.push_back(cur);
            return;
        }
        const std::int64_t r = isqrt64(rem);
        for (std::int64_t x = -r; x <= r; ++x) {
            cur[pos] = x;
            self(self, pos + 1, rem - x * x);
        }
    };
    rec(rec, 0, m);
    return out;
}

inline std::int64_t budget_norm_cap(const SearchBudget& budget) {
    if (budget.max_norm < 0 || budget.max_norm > kNormCap)
        throw BudgetExceeded("budget max_norm outside [0, 2^40]");
    return static_cast<std::int64_t>(budget.max_norm);
}

// Frame search over a fixed list of equal-norm vectors. Adjacency rows
// (which later vectors are orthogonal to a given one) are built on demand;
// build_all() fills the whole table, in parallel when asked.
class FrameSearch {
  public:
    FrameSearch(const std::vector<IVec>& vecs, int d) : vecs_(vecs), d_(d), n_(vecs.size()) {
        adj_.resize(n_);
        ready_.assign(n_, 0);
    }

    // Index chain of the first frame in canonical DFS order.
    std::optional<std::vector<std::size_t>> find_first() {
        std::vector<std::size_t> chain;
        for (std::size_t i = 0; i < n_; ++i)
            if (branch_find(i, chain)) return chain;
        return std::nullopt;
    }

    std::optional<std::vector<std::size_t>> find_first_parallel(int threads) {
        if (threads <= 1 || n_ == 0) return find_first();
        build_all(threads);
        std::vector<std::vector<std::size_t>> hits(n_);
        std::vector<std::uint8_t> hit(n_, 0);
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best{n_};
        auto worker = [&] {
            std::vector<std::size_t> chain;
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n_) return;
                if (i >= best.load()) continue;  // a smaller branch already hit
                chain.clear();
                if (branch_find(i, chain)) {
                    hits[i] = chain;
                    hit[i] = 1;
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        };
        run_workers(worker, threads);
        for (std::size_t i = 0; i < n_; ++i)
            if (hit[i]) return hits[i];
        return std::nullopt;
    }

    // Number of frames, capped; .second reports whether the cap was hit.
    std::pair<std::uint64_t, bool> count(std::uint64_t cap, int threads) {
        if (cap == 0) return {0, true};
        if (threads > 1 && n_ > 0) {
            build_all(threads);
            std::vector<std::uint64_t> counts(n_, 0);
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= n_) return;
                    counts[i] = branch_count(i, cap);
                }
            };
            run_workers(worker, threads);
            std::uint64_t total = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                total += counts[i];
                if (total >= cap) return {cap, true};
            }
            return {total, false};
        }
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            total += branch_count(i, cap - total);
            if (total >= cap) return {cap, true};
        }
        return {total, false};
    }

  private:
    const std::vector<IVec>& vecs_;
    int d_;
    std::size_t n_;
    std::vector<Bits> adj_;
    std::vector<std::uint8_t> ready_;

    const Bits& row(std::size_t i) {
        if (!ready_[i]) {
            Bits b(n_);
            for (std::size_t j = 0; j < n_; ++j)
                if (j != i && dot64(vecs_[i], vecs_[j]) == 0) b.set(j);
            adj_[i] = std::move(b);
            ready_[i] = 1;
        }
        return adj_[i];
    }

    void build_all(int threads) {
        std::vector<std::size_t> missing;
        for (std::size_t i = 0; i < n_; ++i)
            if (!ready_[i]) missing.push_back(i);
        if (missing.empty()) return;
        if (threads <= 1) {
            for (std::size_t i : missing) row(i);
            return;
        }
        // Workers write distinct slots; ready_ flips only after the join.
        std::atomic<std::size_t> cursor{0};
        auto fill = [&] {
            for (;;) {
                const std::size_t k = cursor.fetch_add(1);
                if (k >= missing.size()) return;
                const std::size_t i = missing[k];
                Bits b(n_);
                for (std::size_t j = 0; j < n_; ++j)
                    if (j != i && dot64(vecs_[i], vecs_[j]) == 0) b.set(j);
                adj_[i] = std::move(b);
            }
        };
        run_workers(fill, threads);
        for (std::size_t i : missing) ready_[i] = 1;
    }

    template <class F>
    static void run_workers(F&& f, int threads) {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(f);
        for (std::thread& th : pool) th.join();
    }

    bool branch_find(std::size_t head, std::vector<std::size_t>& chain) {
        chain.push_back(head);
        if (static_cast<int>(chain.size()) == d_) return true;
        const Bits cand = row(head);
        if (dfs_find(cand, head, chain)) return true;
        chain.pop_back();
        return false;
    }

    bool dfs_find(const Bits& cand, std::size_t last, std::vector<std::size_t>& chain) {
        const std::size_t need = static_cast<std::size_t>(d_) - chain.size();
        if (cand.count() < need) return false;
        for (std::size_t j = cand.find_next(last); j != Bits::npos; j = cand.find_next(j)) {
            chain.push_back(j);
            if (static_cast<int>(chain.size()) == d_) return true;
            Bits next = cand;
            next &= row(j);
            if (dfs_find(next, j, chain)) return true;
            chain.pop_back();
        }
        return false;
    }

    std::uint64_t branch_count(std::size_t head, std::uint64_t cap) {
        if (cap == 0) return 0;
        if (d_ == 1) return 1;
        return dfs_count(row(head), head, d_ - 1, cap);
    }

    std::uint64_t dfs_count(const Bits& cand, std::size_t last, int remaining, std::uint64_t cap) {
        std::uint64_t found = 0;
        if (cand.count() < static_cast<std::size_t>(remaining)) return 0;
        for (std::size_t j = cand.find_next(last); j != Bits::npos; j = cand.find_next(j)) {
            if (remaining == 1) {
                if (++found >= cap) return found;
                continue;
            }
            Bits next = cand;
            next &= row(j);
            found += dfs_count(next, j, remaining - 1, cap - found);
            if (found >= cap) return found;
        }
        return found;
    }
};

// Membership-only decision, exploiting the signed-permutation symmetry of
// Z^n: any frame maps to one containing a vector with sorted non-negative
// coordinates, so anchoring the search on those few representatives decides
// existence much faster than the full canonical sweep. Frames containing the
// anchor correspond to (d-1)-frames inside its orthogonal complement.
inline bool exists_frame(const std::vector<IVec>& vecs, int d) {
    if (d == 1) return !vecs.empty();
    for (const IVec& rep : vecs) {
        bool canonical = rep[0] >= 0;
        for (std::size_t k = 1; canonical && k < rep.size(); ++k)
            canonical = rep[k - 1] <= rep[k];
        if (!canonical) continue;
        std::vector<IVec> perp;
        for (const IVec& u : vecs)
            if (dot64(rep, u) == 0) perp.push_back(u);
        if (perp.size() + 1 < static_cast<std::size_t>(d)) continue;
        FrameSearch sub(perp, d - 1);
        if (sub.find_first()) return true;
    }
    return false;
}

inline CubeWitness witness_from_chain(const std::vector<IVec>& vecs,
                                      const std::vector<std::size_t>& chain, const Int& m, int n) {
    CubeWitness w;
    w.m = m;
    w.d = static_cast<int>(chain.size());
    w.n = n;
    for (std::size_t idx : chain) {
        LatticeVector row;
        row.reserve(static_cast<std::size_t>(n));
        for (std::int64_t x : vecs[idx]) row.emplace_back(x);
        w.rows.push_back(std::move(row));
    }
    return w;
}

inline CubeWitness zero_witness(int d, int n) {
    CubeWitness w;
    w.m = 0;
    w.d = d;
    w.n = n;
    w.rows.assign(static_cast<std::size_t>(d),
                  LatticeVector(static_cast<std::size_t>(n), Int(0)));
    return w;
}

}  // namespace detail

inline std::vector<LatticeVector> enumerate_norm_vectors(
    const Int& m, int n, const SearchBudget& budget = detail::kDefaultBudget) {
    if (n < 1) throw PreconditionViolated("enumerate_norm_vectors: n must be positive");
    if (m < 0) throw PreconditionViolated("enumerate_norm_vectors: m must be non-negative");
    if (n > detail::kEnumDimCap)
        throw BudgetExceeded("enumerate_norm_vectors: n > " + std::to_string(detail::kEnumDimCap));
    const std::int64_t cap = detail::budget_norm_cap(budget);
    if (m > cap) throw BudgetExceeded("enumerate_norm_vectors: m exceeds budget max_norm");
    const auto raw = detail::enumerate_i64(static_cast<std::int64_t>(m), n);
    std::vector<LatticeVector> out;
    out.reserve(raw.size());
    for (const auto& v : raw) {
        LatticeVector row;
        row.reserve(v.size());
        for (std::int64_t x : v) row.emplace_back(x);
        out.push_back(std::move(row));
    }
    return out;
}

struct OracleVerdict {
    bool member = false;
    std::optional<CubeWitness> witness;  // first frame in canonical search order
};

inline OracleVerdict oracle_is_member(const Int& m, const DimensionPair& p,
                                      const SearchBudget& budget = detail::kDefaultBudget,
                                      int threads = 1) {
    if (m < 0) throw PreconditionViolated("oracle_is_member: m must be non-negative");
    if (p.n > budget.max_dim) throw BudgetExceeded("oracle_is_member: n exceeds budget max_dim");
    const std::int64_t cap = detail::budget_norm_cap(budget);
    if (m > cap) throw BudgetExceeded("oracle_is_member: m exceeds budget max_norm");
    if (p.n > detail::kEnumDimCap)
        throw BudgetExceeded("oracle_is_member: n > " + std::to_string(detail::kEnumDimCap));
    if (m == 0) return {true, detail::zero_witness(p.d, p.n)};
    const auto vecs = detail::enumerate_i64(static_cast<std::int64_t>(m), p.n);
    if (!detail::exists_frame(vecs, p.d)) return {false, std::nullopt};
    // A frame exists; fetch the first one in canonical search order.
    detail::FrameSearch search(vecs, p.d);
    const auto chain = threads > 1 ? search.find_first_parallel(threads) : search.find_first();
    if (!chain) throw std::logic_error("oracle_is_member: canonical search missed a frame");
    return {true, detail::witness_from_chain(vecs, *chain, m, p.n)};
}

struct CensusRow {
    Int m;
    bool member = false;
    std::uint64_t frames = 0;
    bool capped = false;
};

inline std::vector<CensusRow> census(const DimensionPair& p, const Int& m_max,
                                     const SearchBudget& budget = detail::kDefaultBudget,
                                     int threads = 1) {
    if (m_max < 0) throw PreconditionViolated("census: m_max must be non-negative");
    if (p.n > budget.max_dim) throw BudgetExceeded("census: n exceeds budget max_dim");
    const std::int64_t cap = detail::budget_norm_cap(budget);
    if (m_max > cap) throw BudgetExceeded("census: m_max exceeds budget max_norm");
    if (p.n > detail::kEnumDimCap)
        throw BudgetExceeded("census: n > " + std::to_string(detail::kEnumDimCap));
    std::vector<CensusRow> rows;
    rows.reserve(static_cast<std::size_t>(m_max) + 1);
    for (Int m = 0; m <= m_max; ++m) {
        CensusRow row;
        row.m = m;
        if (m == 0) {
            row.member = true;
            row.frames = 1;  // the all-zero frame
        } else {
            const auto vecs = detail::enumerate_i64(static_cast<std::int64_t>(m), p.n);
            detail::FrameSearch search(vecs, p.d);
            const auto [frames, capped] = search.count(budget.max_frames, threads);
            row.member = frames > 0;
            row.frames = frames;
            row.capped = capped;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace latcube
