#include "kf/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace kf {

unsigned factor_bits_from_env() {
    if (const char* v = std::getenv("KF_FACTOR_BITS")) {
        try {
            long b = std::stol(v);
            if (b > 0) return static_cast<unsigned>(b);
        } catch (...) {
        }
    }
    return kDefaultFactorBits;
}

namespace {

constexpr unsigned long kTrialLimit = 1ul << 16;

bool is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

// Brent's cycle detection with batched gcds. Returns a nontrivial divisor or 0 on failure.
Int brent_rho(const Int& n, unsigned long c) {
    Int y = 2, x, ys, q = 1, g = 1, tmp;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](Int& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    // 2^26 iterations bounds the work for cofactors within the bit limit.
    const unsigned long limit = 1ul << 26;
    unsigned long steps = 0;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                f(y);
                tmp = ::abs(x - y);
                q *= tmp;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
            steps += lim;
        }
        r *= 2;
        if (steps > limit) return 0;
    }
    if (g == n) {
        do {
            f(ys);
            tmp = ::abs(x - ys);
            mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? Int(0) : g;
}

void split(const Int& n, unsigned max_bits, std::map<Int, unsigned>& out,
           std::map<Int, unsigned>& unresolved) {
    if (n == 1) return;
    // Far past the bound a primality proof costs more than it can tell us.
    const bool huge = mpz_sizeinbase(n.get_mpz_t(), 2) > 16 * max_bits;
    if (!huge && is_prime(n)) {
        ++out[n];
        return;
    }
    // Perfect powers defeat rho's gcd batching only mildly, but peel them cheaply.
    if (!huge && mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long e = mpz_sizeinbase(n.get_mpz_t(), 2); e >= 2; --e) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
                std::map<Int, unsigned> sub, subu;
                split(root, max_bits, sub, subu);
                for (auto& [p, k] : sub) out[p] += k * static_cast<unsigned>(e);
                for (auto& [p, k] : subu) unresolved[p] += k * static_cast<unsigned>(e);
                return;
            }
        }
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > max_bits) {
        ++unresolved[n];
        return;
    }
    for (unsigned long c = 1; c < 20; ++c) {
        Int d = brent_rho(n, c);
        if (d != 0) {
            split(d, max_bits, out, unresolved);
            split(Int(n / d), max_bits, out, unresolved);
            return;
        }
    }
    ++unresolved[n];
}

}  // namespace

Factorization factor_integer(const Int& n_in, unsigned max_bits) {
    if (n_in == 0) throw Error(Errc::Domain, "cannot factor zero");
    Int n = ::abs(n_in);
    std::map<Int, unsigned> primes, unresolved;
    for (unsigned long p = 2; p < kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * Int(p) > n) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) primes[Int(p)] += e;
    }
    split(n, max_bits, primes, unresolved);
    Factorization f;
    f.factors.assign(primes.begin(), primes.end());
    f.unresolved.assign(unresolved.begin(), unresolved.end());
    return f;
}

}  // namespace kf
