#pragma once

/**
 * @file density.hpp
 * @brief Certified rank-one fibers near a target parameter.
 *
 * Pencil witnesses come from the quartic and sextic parametrizations. Kummer witnesses
 * come from the chord walk on a K_y fiber of (t^3 + ct + d) y^2 = x^3 + ax + b.
 */

#include <optional>
#include <string>
#include <vector>

#include "kf/census.hpp"
#include "kf/cubic.hpp"
#include "kf/param.hpp"

namespace kf {

/// Open interval; a missing end is infinite.
struct OpenInterval {
    std::optional<Rat> lo, hi;
    bool contains(const Rat& v) const { return (!lo || *lo < v) && (!hi || v < *hi); }
};

/// Image of u -> t(u) = -d/c + K/u^e: (-d/c, inf) when K > 0, else (-inf, -d/c).
OpenInterval half_interval(const ParamFamily& F, const Coeffs& coeffs);

struct ApproxU {
    Rat u, t, error;
};

/**
 * The simplest positive u (least denominator, then numerator) with |t(u) - t1| < epsilon,
 * skipping u with y(u) = 0 and any u in `excluded`. Throws Domain unless t1 lies in the
 * open half-interval and epsilon > 0.
 */
ApproxU approximate_u_for_t(const ParamFamily& F, const Coeffs& coeffs, const Rat& t1, const Rat& epsilon,
                            const std::vector<Rat>& excluded = {});

struct DensityCaps {
    int multiples = 64;     // seed multiples tried when shrinking y0
    int chord_steps = 200;  // chord-walk steps, both directions together
    int retries = 16;       // failed certifications tolerated
    long max_bits = 16384;  // a walk direction stops once a coordinate is this large
};

struct DensityWitness {
    std::string kind;  // "pencil" or "kummer"
    Rat t1, epsilon, t_prime, error;
    std::optional<Rat> u;  // pencil: the parameter
    Rat x, y;              // f(t') y^2 = g(x)
    WeierstrassCurve fiber{Rat(1), Rat(0)};
    ECPoint fiber_point = ECPoint::infinity();  // (f(t') x, f(t')^2 y) on fiber
    TorsionVerdict certificate;
    // pencil
    bool f_nonnegative = false;  // f has no real root of odd multiplicity
    // kummer
    long multiple = 0;     // seed multiple that fixed y
    long chord_index = 0;  // n with the witness equal to Q_n
    std::optional<ChordTorsionVerdict> chord_certificate;
    bool three_roots = false;  // g has three real roots; then x lies on the oval of K_t'
};

struct DensityOutcome {
    bool found = false;
    std::optional<DensityWitness> witness;
    std::string reason;  // why the search was inconclusive
    long steps = 0;
};

/**
 * Certified point of infinite order on the fiber E^{f(t')} with |t' - t1| < epsilon,
 * taken at u = approximate_u_for_t(...). Torsion, degenerate and pole candidates are
 * excluded and the search repeats, up to caps.retries times; then CapExceeded.
 */
DensityWitness pencil_density_witness(const TwistPencil& P, const ParamFamily& F, const Coeffs& coeffs, const Rat& t1,
                                      const Rat& epsilon, const DensityCaps& caps = {});

/**
 * Chord-walk witness on K = build_quotient_surface(2, 3, ...). The seed must lie on K
 * and have infinite order on K_t0 (else SeedTorsion). Multiples of the seed are scanned
 * for a y0 with connected K_y0 and f(t1) y0^2 between the local extrema of g; the point is
 * then walked along Q_n on K_y0 and each hit is certified on its K_t fiber. Returns an
 * inconclusive outcome when caps run out.
 */
DensityOutcome kummer_density_witness(const QuotientSurface& S, const Rat& x0, const Rat& y0, const Rat& t0,
                                      const Rat& t1, const Rat& epsilon, const DensityCaps& caps = {});

/// Recomputes everything a witness claims; returns an empty string or the first failure.
std::string verify_density_witness(const DensityWitness& w, const UPoly& g, const UPoly& f);

}  // namespace kf
