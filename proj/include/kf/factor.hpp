#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kf/rational.hpp"

namespace kf {

/// Default cap on the size of a composite cofactor handed to Pollard rho.
inline constexpr unsigned kDefaultFactorBits = 96;

/// The active bit bound: KF_FACTOR_BITS from the environment when set, else the default.
unsigned factor_bits_from_env();

struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;  // ascending primes (probable primes above 2^64)
    std::vector<std::pair<Int, unsigned>> unresolved;  // composite cofactors beyond the bit bound
    bool complete() const { return unresolved.empty(); }
};

/**
 * Factors |n| (n != 0) by trial division to 2^16, then Brent's variant of Pollard rho
 * on cofactors of at most `max_bits` bits. Larger composite cofactors are returned in
 * `unresolved` rather than attempted. Primality is GMP's probabilistic test with 40 rounds.
 */
Factorization factor_integer(const Int& n, unsigned max_bits = kDefaultFactorBits);

}  // namespace kf
