// latcube/qform.hpp — diagonal quadratic forms over Q and their equivalences.
//
// <a_1,...,a_n> denotes the form sum a_i x_i^2. Two forms are equivalent when
// Q2 = A^t Q1 A for an invertible rational A; an orthogonal basis of Q^n with
// row norms l_1,...,l_n is exactly such an A between <1,...,1> and
// <l_1,...,l_n>. This header also carries the constructive pieces peculiar to
// d-frames: the cross-product extension in Q^3 and the two-square extraction
// from an orthogonal pair of equal-norm integer vectors.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "construct.hpp"

namespace latcube {

using RationalVector = std::vector<Rat>;
using RationalMatrix = std::vector<std::vector<Rat>>;  // row-major

inline Rat dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: vector lengths differ");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat norm2(const RationalVector& v) {
    Rat s = 0;
    for (const Rat& x : v) s += x * x;
    return s;
}

inline bool is_zero(const RationalVector& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

inline RationalVector to_rational(const LatticeVector& v) {
    RationalVector out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

struct DiagonalForm {
    std::vector<Rat> entries;

    explicit DiagonalForm(std::vector<Rat> entries_) : entries(std::move(entries_)) {
        if (entries.empty()) throw DimensionMismatch("DiagonalForm: needs at least one entry");
    }

    std::size_t size() const { return entries.size(); }

    friend bool operator==(const DiagonalForm& a, const DiagonalForm& b) {
        return a.entries == b.entries;
    }
};

// k-fold sum k * <a>
inline DiagonalForm repeated_form(const Rat& a, std::size_t k) {
    return DiagonalForm(std::vector<Rat>(k, a));
}

inline DiagonalForm direct_sum(const DiagonalForm& f, const DiagonalForm& g) {
    std::vector<Rat> entries = f.entries;
    entries.insert(entries.end(), g.entries.begin(), g.entries.end());
    return DiagonalForm(std::move(entries));
}

struct EquivalenceWitness {
    DiagonalForm source;
    DiagonalForm target;
    RationalMatrix transform;  // target = transform^t * diag(source) * transform
};

// Exact determinant by Gaussian elimination.
inline Rat determinant(RationalMatrix a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DimensionMismatch("determinant: matrix not square");
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rat factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

inline bool verify_equivalence(const EquivalenceWitness& w) {
    const std::size_t n = w.source.size();
    if (w.target.size() != n) throw DimensionMismatch("verify_equivalence: form sizes differ");
    if (w.transform.size() != n)
        throw DimensionMismatch("verify_equivalence: transform is not n x n");
    for (const auto& row : w.transform)
        if (row.size() != n) throw DimensionMismatch("verify_equivalence: transform is not n x n");
    if (determinant(w.transform) == 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Rat entry = 0;
            for (std::size_t k = 0; k < n; ++k)
                entry += w.transform[k][i] * w.source.entries[k] * w.transform[k][j];
            const Rat expected = i == j ? w.target.entries[i] : Rat(0);
            if (entry != expected) return false;
        }
    }
    return true;
}

// Orthogonal rows v_1,...,v_n become the columns of a transform certifying
// <1,...,1> ~ <|v_1|^2,...,|v_n|^2>.
inline EquivalenceWitness basis_to_equivalence(const std::vector<RationalVector>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw DimensionMismatch("basis_to_equivalence: empty basis");
    for (const RationalVector& row : rows) {
        if (row.size() != n) throw DimensionMismatch("basis_to_equivalence: need a square system");
        if (is_zero(row)) throw ZeroVector("basis_to_equivalence: zero basis vector");
    }
    std::vector<Rat> norms;
    norms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            if (dot(rows[i], rows[j]) != 0)
                throw NotOrthogonal("basis_to_equivalence: rows " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are not orthogonal");
        norms.push_back(norm2(rows[i]));
    }
    RationalMatrix transform(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) transform[i][j] = rows[j][i];
    EquivalenceWitness w{repeated_form(Rat(1), n), DiagonalForm(std::move(norms)),
                         std::move(transform)};
    if (!verify_equivalence(w))
        throw std::logic_error("basis_to_equivalence: self-check failed");
    return w;
}

inline RationalVector cross_product(const RationalVector& v, const RationalVector& w) {
    if (v.size() != 3 || w.size() != 3)
        throw DimensionMismatch("cross_product: defined for length-3 vectors");
    return {v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2], v[0] * w[1] - v[1] * w[0]};
}

struct BasisExtension {
    std::vector<RationalVector> basis;  // input rows followed by the appended vectors
    std::vector<Rat> residual_norms;    // squared norms of the appended vectors
};

// Completes d pairwise-orthogonal rows to an orthogonal basis of Q^n by
// orthogonalizing the standard basis vectors against the running system.
// Appended vectors are rescaled to primitive integer vectors.
inline BasisExtension gram_schmidt_extend(const std::vector<RationalVector>& rows) {
    using boost::multiprecision::abs;
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (rows.empty()) throw PreconditionViolated("gram_schmidt_extend: need at least one vector");
    const std::size_t n = rows[0].size();
    if (rows.size() > n)
        throw DimensionMismatch("gram_schmidt_extend: more vectors than the ambient dimension");
    for (const RationalVector& row : rows) {
        if (row.size() != n) throw DimensionMismatch("gram_schmidt_extend: ragged input");
        if (is_zero(row)) throw ZeroVector("gram_schmidt_extend: zero input vector");
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (dot(rows[i], rows[j]) != 0)
                throw NotOrthogonal("gram_schmidt_extend: rows " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are not orthogonal");

    BasisExtension out;
    out.basis = rows;
    for (std::size_t k = 0; k < n && out.basis.size() < n; ++k) {
        RationalVector cand(n, Rat(0));
        cand[k] = 1;
        for (const RationalVector& b : out.basis) {
            const Rat coef = b[k] / norm2(b);  // e_k . b == b[k]
            if (coef == 0) continue;
            for (std::size_t c = 0; c < n; ++c) cand[c] -= coef * b[c];
        }
        if (is_zero(cand)) continue;  // e_k lies in the current span
        Int denom_lcm = 1;
        for (const Rat& x : cand) denom_lcm = lcm(denom_lcm, Int(denominator(x)));
        LatticeVector scaled;
        scaled.reserve(n);
        for (const Rat& x : cand) scaled.push_back(Int(numerator(x)) * (denom_lcm / Int(denominator(x))));
        Int g = 0;
        for (const Int& x : scaled) g = gcd(g, abs(x));
        RationalVector primitive;
        primitive.reserve(n);
        for (const Int& x : scaled) primitive.emplace_back(x / g);
        out.residual_norms.push_back(norm2(primitive));
        out.basis.push_back(std::move(primitive));
    }
    if (out.basis.size() != n)
        throw std::logic_error("gram_schmidt_extend: failed to complete a basis");
    return out;
}

struct TwoSquareExtraction {
    Rat x;
    Rat y;                      // x^2 + y^2 == m
    bool sign_flipped = false;  // the degenerate case replaced w by -w
};

namespace detail {

inline void check_orthogonal_equal_norm_pair(const LatticeVector& v, const LatticeVector& w,
                                             Int& m_out) {
    if (v.size() != 3 || w.size() != 3)
        throw PreconditionViolated("expected two vectors of length 3");
    const Int mv = norm2(v), mw = norm2(w);
    if (mv != mw) throw PreconditionViolated("vectors have different squared norms");
    if (mv == 0) throw PreconditionViolated("zero vectors");
    if (dot(v, w) != 0) throw PreconditionViolated("vectors are not orthogonal");
    m_out = mv;
}

}  // namespace detail

// From an orthogonal pair v = (a,b,c), w = (d,e,f) of squared norm m, the
// cross-product basis collapses to the closed form
//     m = (m(d-b) / (bd - ae - m))^2 + (m(a+e) / (bd - ae - m))^2.
// When bd - ae == m the denominator would vanish; replacing w by -w negates
// bd - ae, which then cannot equal m > 0 again.
inline TwoSquareExtraction witt_extract_two_squares(const LatticeVector& v, LatticeVector w) {
    Int m;
    detail::check_orthogonal_equal_norm_pair(v, w, m);
    TwoSquareExtraction out;
    if (v[1] * w[0] - v[0] * w[1] == m) {
        for (Int& x : w) x = -x;
        out.sign_flipped = true;
    }
    const Int denom = v[1] * w[0] - v[0] * w[1] - m;
    out.x = Rat(m * (w[0] - v[1])) / Rat(denom);
    out.y = Rat(m * (v[0] + w[1])) / Rat(denom);
    if (out.x * out.x + out.y * out.y != m)
        throw std::logic_error("witt_extract_two_squares: extraction identity failed");
    return out;
}

// Symbolic check of the ternary identity behind the extraction: with
// u = v x w,
//   (a x + d y + u1 z)^2 + (b x + e y + u2 z)^2 + (c x + f y + u3 z)^2
//     == m x^2 + m y^2 + (m z)^2
// as polynomials in (x, y, z). Compares all six Gram coefficients exactly.
inline bool remark_identity_check(const LatticeVector& v, const LatticeVector& w) {
    Int m;
    detail::check_orthogonal_equal_norm_pair(v, w, m);
    const LatticeVector u = {v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2],
                             v[0] * w[1] - v[1] * w[0]};
    return norm2(v) == m && norm2(w) == m && norm2(u) == m * m && dot(v, w) == 0 &&
           dot(v, u) == 0 && dot(w, u) == 0;
}

}  // namespace latcube
