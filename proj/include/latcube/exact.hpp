// latcube/exact.hpp — exact scalar arithmetic and elementary number theory.
//
// Everything in this library computes over arbitrary-precision integers and
// rationals; no floating point is used anywhere, so every stated equality in
// the other headers is an exact one. The scalar types are backed by
// Boost.Multiprecision: cpp_int for integers and cpp_rational for rationals
// (the latter is kept reduced with a positive denominator by construction).

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "errors.hpp"

namespace latcube {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct SqrtResult {
    Int root;    // floor(sqrt(m))
    bool exact;  // root * root == m
};

// Integer square root by Newton iteration, monotone from an over-estimate.
inline SqrtResult int_sqrt(const Int& m) {
    if (m < 0) throw PreconditionViolated("int_sqrt: negative input");
    if (m == 0) return {Int(0), true};
    if (m <= 0x7fffffffffffffffLL) {  // single-word fast path
        const std::int64_t v = static_cast<std::int64_t>(m);
        const int bits = std::bit_width(static_cast<std::uint64_t>(v));
        std::int64_t x = std::int64_t(1) << ((bits + 1) / 2);  // x > sqrt(v)
        std::int64_t y = (x + v / x) / 2;
        while (y < x) {
            x = y;
            y = (x + v / x) / 2;
        }
        return {Int(x), x * x == v};
    }
    const unsigned bits = boost::multiprecision::msb(m);  // requires m > 0
    Int x = Int(1) << (bits / 2 + 1);                     // x > sqrt(m)
    Int y = (x + m / x) >> 1;
    while (y < x) {
        x = y;
        y = (x + m / x) >> 1;
    }
    return {x, x * x == m};
}

namespace detail {

// Bases covering a deterministic Miller-Rabin test for n < 3.317e24,
// far beyond anything this library is asked to factor.
inline const std::int64_t kMillerRabinBases[] = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};

// true if a proves n composite
inline bool miller_rabin_witness(const Int& n, const Int& a, const Int& odd,
                                 unsigned twos) {
    Int x = boost::multiprecision::powm(a % n, odd, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < twos; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace detail

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (std::int64_t p : detail::kMillerRabinBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int odd = n - 1;
    unsigned twos = 0;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++twos;
    }
    for (std::int64_t a : detail::kMillerRabinBases)
        if (detail::miller_rabin_witness(n, Int(a), odd, twos)) return false;
    return true;
}

struct PrimePower {
    Int prime;
    unsigned exponent;

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
};

// Prime factorization, primes strictly increasing.
using Factorization = std::vector<PrimePower>;

namespace detail {

// Nontrivial factor of an odd composite n, Brent's variant of Pollard rho.
// Deterministic: the polynomial increment c walks 1, 2, 3, ...
inline Int pollard_brent(const Int& n) {
    using boost::multiprecision::abs;
    using boost::multiprecision::gcd;
    for (Int c = 1;; ++c) {
        Int y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                const Int lim = (r - k) < 128 ? (r - k) : Int(128);
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // The batched gcd overshot; replay one step at a time.
            g = 1;
            y = ys;
            while (g == 1) {
                y = (y * y + c) % n;
                g = gcd(abs(x - y), n);
            }
        }
        if (g != n) return g;
    }
}

inline void factor_into(Int n, std::map<Int, unsigned>& acc) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++acc[n];
        return;
    }
    const Int f = pollard_brent(n);
    factor_into(f, acc);
    factor_into(n / f, acc);
}

}  // namespace detail

inline Factorization factorize(const Int& m) {
    if (m == 0) throw ZeroInput("factorize: m = 0 has no factorization");
    if (m < 0) throw PreconditionViolated("factorize: negative input");
    std::map<Int, unsigned> acc;
    Int n = m;
    while ((n & 1) == 0) {
        n >>= 1;
        ++acc[Int(2)];
    }
    if (n > 1 && is_prime(n)) {
        ++acc[n];
        n = 1;
    }
    constexpr std::int64_t kTrialLimit = 1'000'000;
    for (std::int64_t d = 3; d <= kTrialLimit && n > 1; d += 2) {
        if (Int(d) * d > n) break;
        if (n % d != 0) continue;
        while (n % d == 0) {
            n /= d;
            ++acc[Int(d)];
        }
        if (n > 1 && is_prime(n)) {
            ++acc[n];
            n = 1;
        }
    }
    if (n > 1) {
        if (Int(kTrialLimit) * kTrialLimit > n) {
            ++acc[n];  // survived trial division below its square root
        } else {
            detail::factor_into(n, acc);
        }
    }
    Factorization out;
    out.reserve(acc.size());
    for (const auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

}  // namespace latcube
