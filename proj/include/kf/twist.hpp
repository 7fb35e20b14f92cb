#pragma once

/**
 * @file twist.hpp
 * @brief Classes in Q^* / (Q^*)^k and simultaneous twists with rational points.
 */

#include <string>
#include <vector>

#include "kf/param.hpp"

namespace kf {

struct KthPowerFreeClass {
    int k = 2;
    int sign = 1;                                    // always +1 when k is odd
    std::vector<std::pair<Int, unsigned>> factors;  // ascending primes, exponents in [1, k-1]

    /// The k-th-power-free integer sign * prod p^e.
    Int representative() const;
    std::string str() const;
    friend bool operator==(const KthPowerFreeClass&, const KthPowerFreeClass&) = default;
};

/**
 * Canonical class of q modulo k-th powers. Throws Domain when q = 0 or k < 2, and
 * FactorLimit when a cofactor exceeds the factorization bit bound.
 */
KthPowerFreeClass kth_power_free_class(const Rat& q, int k);

struct UClass {
    KthPowerFreeClass cls;
    Rat representative;  // l = f(t(u))
};

/**
 * Class of f(t(u)) for a GeneralKN family matching S. Checks that g(x(u)) lands in
 * the same class. Throws Pole at poles of the family, Domain when f(t(u)) or y(u) is 0.
 */
UClass twist_class_of_u(const QuotientSurface& S, const ParamFamily& F, const Rat& u);

struct TwistPairWitness {
    Rat u;
    Rat l;
    KthPowerFreeClass cls;
    Rat x, y1;  // l y1^k = x^n + ax + b
    Rat t, y2;  // l y2^k = t^n + ct + d
};

/// Exact re-check of both point equations.
bool verify_twist_witness(const QuotientSurface& S, const TwistPairWitness& w);

struct TwistSearch {
    std::vector<TwistPairWitness> witnesses;
    bool shortfall = false;          // fewer than `want` classes within the height bound
    long candidates = 0;             // u values examined
    std::vector<std::string> skipped;  // reasons for candidates dropped on factorization limits
};

/// The u = p/q with gcd 1, q >= 1, 1 <= max(|p|, q) <= H, ordered by max(|p|, q), then |p|, then q, positive first.
std::vector<Rat> enumerate_by_height(long H);

/**
 * Witnesses with pairwise distinct classes, scanning u by increasing height. Throws
 * Domain for the excluded cases a = c = 0 or b = d = 0.
 */
TwistSearch simultaneous_twists(const QuotientSurface& S, const ParamFamily& F, int want, long height_bound);

}  // namespace kf
