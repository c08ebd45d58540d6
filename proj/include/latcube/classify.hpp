// latcube/classify.hpp — which squared side lengths admit a d-cube in Z^n.
//
// For 1 <= d <= n, the set of integers m such that a d-dimensional cube of
// squared side length m has all vertices in Z^n depends only on d mod 4 and
// min(n - d, 3):
//
//            d mod 4:   1    2    3    0
//   n - d == 0        I_1  I_2  I_1  N_0
//   n - d == 1        I_2  I_2  N_0  N_0
//   n - d == 2        I_3  N_0  N_0  N_0
//   n - d >= 3        N_0  N_0  N_0  N_0
//
// where I_k is the set of sums of k integer squares and N_0 means every
// non-negative integer. The oracle module re-derives this table from scratch
// by exhaustive search; the two routes are compared in the test suite.

#pragma once

#include <string>
#include <utility>

#include "squares.hpp"

namespace latcube {

enum class SetDescriptor { I1, I2, I3, N0 };

inline const char* to_string(SetDescriptor s) {
    switch (s) {
        case SetDescriptor::I1: return "I1";
        case SetDescriptor::I2: return "I2";
        case SetDescriptor::I3: return "I3";
        case SetDescriptor::N0: return "N0";
    }
    return "?";
}

struct DimensionPair {
    int d;
    int n;

    DimensionPair(int d_, int n_) : d(d_), n(n_) {
        if (d < 1 || d > n)
            throw InvalidDimensions("require 1 <= d <= n, got d=" + std::to_string(d_) +
                                    ", n=" + std::to_string(n_));
    }
};

inline SetDescriptor descriptor_for(const DimensionPair& p) {
    using enum SetDescriptor;
    static constexpr SetDescriptor table[4][4] = {
        //  n-d == 0, 1, 2, >= 3
        {N0, N0, N0, N0},  // d mod 4 == 0
        {I1, I2, I3, N0},  // d mod 4 == 1
        {I2, I2, N0, N0},  // d mod 4 == 2
        {I1, N0, N0, N0},  // d mod 4 == 3
    };
    const int gap = p.n - p.d >= 3 ? 3 : p.n - p.d;
    return table[p.d % 4][gap];
}

struct MembershipVerdict {
    bool member = true;
    SetDescriptor descriptor = SetDescriptor::N0;

    enum class Failure {
        None,
        NotPerfectSquare,  // I1 cell, m is not a square
        OddPowerPrime,     // I2 cell, offending_prime = 3 (mod 4) has odd exponent
        FourPowerResidue,  // I3 cell, m = 4^pow4 * residue with residue = 7 (mod 8)
    };
    Failure failure = Failure::None;
    Int offending_prime = 0;
    unsigned pow4 = 0;
    Int residue = 0;

    // Human-readable refutation; empty for members.
    std::string reason() const {
        switch (failure) {
            case Failure::None:
                return "";
            case Failure::NotPerfectSquare:
                return "I1 violation: not a perfect square";
            case Failure::OddPowerPrime:
                return "I2 violation: prime " + offending_prime.str() + " odd exponent";
            case Failure::FourPowerResidue:
                return "I3 violation: m = 4^" + std::to_string(pow4) + " * " + residue.str() +
                       ", " + residue.str() + " = 7 (mod 8)";
        }
        return "";
    }
};

inline MembershipVerdict is_member(const Int& m, const DimensionPair& p) {
    if (m < 0) throw PreconditionViolated("is_member: m must be non-negative");
    MembershipVerdict v;
    v.descriptor = descriptor_for(p);
    switch (v.descriptor) {
        case SetDescriptor::N0:
            break;
        case SetDescriptor::I1:
            if (!is_perfect_square(m)) {
                v.member = false;
                v.failure = MembershipVerdict::Failure::NotPerfectSquare;
            }
            break;
        case SetDescriptor::I2:
            if (m > 0) {
                for (const PrimePower& pp : factorize(m)) {
                    if (pp.prime % 4 == 3 && pp.exponent % 2 == 1) {
                        v.member = false;
                        v.failure = MembershipVerdict::Failure::OddPowerPrime;
                        v.offending_prime = pp.prime;
                        break;
                    }
                }
            }
            break;
        case SetDescriptor::I3:
            if (m > 0) {
                Int r = m;
                unsigned k = 0;
                while (r % 4 == 0) {
                    r /= 4;
                    ++k;
                }
                if (r % 8 == 7) {
                    v.member = false;
                    v.failure = MembershipVerdict::Failure::FourPowerResidue;
                    v.pow4 = k;
                    v.residue = r;
                }
            }
            break;
    }
    return v;
}

// Thrown by constructions whose precondition is membership.
struct NotMember : Error {
    MembershipVerdict verdict;

    explicit NotMember(MembershipVerdict v)
        : Error(v.reason().empty() ? "not a member" : v.reason()), verdict(std::move(v)) {}
};

}  // namespace latcube
