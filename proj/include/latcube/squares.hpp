// latcube/squares.hpp — sums of two, three, four and n squares.
//
// Deciders implement the classical criteria:
//   two squares:   every prime p = 3 (mod 4) divides m to an even power
//   three squares: m is not of the form 4^k * (8*l + 7)
//   four squares:  every non-negative integer qualifies
// Constructive decompositions return the canonical representative: the
// sorted, lexicographically minimal tuple. m = 0 belongs to every set
// (all-zero decomposition).

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace latcube {

struct SquareDecomposition {
    Int target;
    std::vector<Int> terms;  // sorted non-decreasing, sum of squares == target

    SquareDecomposition(Int target_, std::vector<Int> terms_)
        : target(std::move(target_)), terms(std::move(terms_)) {
        Int sum = 0;
        const Int* prev = nullptr;
        for (const Int& t : terms) {
            if (t < 0 || (prev && *prev > t))
                throw std::logic_error("SquareDecomposition: terms not sorted non-negative");
            sum += t * t;
            prev = &t;
        }
        if (sum != target)
            throw std::logic_error("SquareDecomposition: sum of squares mismatch");
    }
};

inline bool is_perfect_square(const Int& m) { return m >= 0 && int_sqrt(m).exact; }

inline bool is_in_I2(const Int& m) {
    if (m < 0) throw PreconditionViolated("is_in_I2: negative input");
    if (m == 0) return true;
    for (const PrimePower& pp : factorize(m))
        if (pp.prime % 4 == 3 && pp.exponent % 2 == 1) return false;
    return true;
}

inline bool is_in_I3(const Int& m) {
    if (m < 0) throw PreconditionViolated("is_in_I3: negative input");
    if (m == 0) return true;
    Int r = m;
    while (r % 4 == 0) r /= 4;
    return r % 8 != 7;
}

namespace detail {

// Minimal (b, c) with lo <= b <= c and b^2 + c^2 == r, if any.
inline std::optional<std::pair<Int, Int>> two_squares_from(const Int& r, const Int& lo) {
    for (Int b = lo; 2 * b * b <= r; ++b) {
        const SqrtResult s = int_sqrt(r - b * b);
        if (s.exact) return std::make_pair(b, s.root);
    }
    return std::nullopt;
}

}  // namespace detail

inline SquareDecomposition decompose_two_squares(const Int& m) {
    if (!is_in_I2(m)) throw NotRepresentable("not a sum of two squares");
    const auto bc = detail::two_squares_from(m, 0);
    if (!bc) throw std::logic_error("decompose_two_squares: criterion passed but search failed");
    return {m, {bc->first, bc->second}};
}

inline SquareDecomposition decompose_three_squares(const Int& m) {
    if (!is_in_I3(m)) throw NotRepresentable("not a sum of three squares");
    for (Int a = 0; 3 * a * a <= m; ++a) {
        const auto bc = detail::two_squares_from(m - a * a, a);
        if (bc) return {m, {a, bc->first, bc->second}};
    }
    throw std::logic_error("decompose_three_squares: criterion passed but search failed");
}

inline SquareDecomposition decompose_four_squares(const Int& m) {
    if (m < 0) throw PreconditionViolated("decompose_four_squares: negative input");
    for (Int a = 0; 4 * a * a <= m; ++a) {
        const Int r = m - a * a;
        if (!is_in_I3(r)) continue;  // no three-square tail, whatever the floor
        for (Int b = a; 3 * b * b <= r; ++b) {
            const auto cd = detail::two_squares_from(r - b * b, b);
            if (cd) return {m, {a, b, cd->first, cd->second}};
        }
    }
    throw std::logic_error("decompose_four_squares: exhausted search");  // unreachable
}

inline SquareDecomposition decompose_n_squares(const Int& m, int n) {
    if (n < 1) throw PreconditionViolated("decompose_n_squares: n must be positive");
    switch (n) {
        case 1: {
            const SqrtResult s = int_sqrt(m);
            if (!s.exact) throw NotRepresentable("not a perfect square");
            return {m, {s.root}};
        }
        case 2:
            return decompose_two_squares(m);
        case 3:
            return decompose_three_squares(m);
        case 4:
            return decompose_four_squares(m);
        default: {
            // Leading zeros keep the tuple sorted and lexicographically minimal.
            std::vector<Int> terms(static_cast<std::size_t>(n) - 4, Int(0));
            for (Int& t : decompose_four_squares(m).terms) terms.push_back(std::move(t));
            return {m, std::move(terms)};
        }
    }
}

}  // namespace latcube
