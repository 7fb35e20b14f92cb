#pragma once

/**
 * @file surface.hpp
 * @brief Quotient surfaces (t^n + ct + d) y^k = x^n + ax + b, twist pencils, and their fibers.
 */

#include "kf/cubic.hpp"
#include "kf/elliptic.hpp"
#include "kf/upoly.hpp"

namespace kf {

struct QuotientSurface {
    int k = 2;
    int n = 3;
    Rat a, b, c, d;

    bool kn_coprime = true;         // C is geometrically irreducible when gcd(k, n) = 1
    bool irreducibility_term = true;  // a^n d^(n-1) - b^(n-1) c^n != 0
    bool excluded_case = false;     // a = c = 0 or b = d = 0

    UPoly g() const;  // x^n + ax + b
    UPoly f() const;  // t^n + ct + d
    bool is_kummer() const { return k == 2 && n == 3; }
};

/// Throws Domain when k or n < 2, (a,b) = (0,0), or (c,d) = (0,0).
QuotientSurface build_quotient_surface(int k, int n, const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// Exact test of (t^n + ct + d) y^k = x^n + ax + b.
bool surface_contains(const QuotientSurface& S, const Rat& x, const Rat& y, const Rat& t);

/// The pencil of quadratic twists of E by f(t) = t^degree + ct + d.
struct TwistPencil {
    WeierstrassCurve curve;
    int degree = 4;
    Rat c, d;

    UPoly g() const;  // x^3 + Ax + B
    UPoly f() const;
    /// The nondegeneracy assumptions of the density statements: for degree 4, B = 0 and
    /// A, c, d nonzero; for degree 6, A = 0 and B, c nonzero.
    bool hypotheses_hold() const;
};

/// Throws Domain unless degree is 4 (with B = 0) or 6 (with A = 0).
TwistPencil build_twist_pencil(const WeierstrassCurve& E, int degree, const Rat& c, const Rat& d);

/// The fiber f(t0) y^2 = g(x), presented as the twist Y^2 = X^3 + q^2 A X + q^3 B with q = f(t0).
struct FiberT {
    Rat t0;
    Twist twist;
    const Rat& q() const { return twist.q; }
    const WeierstrassCurve& curve() const { return twist.curve; }
    ECPoint transport(const Rat& x, const Rat& y) const { return twist.forward(x, y); }
};

/// Throws DegenerateFiber when f(t0) = 0, Singular when g has a repeated root, and
/// Domain for surfaces other than k = 2, n = 3.
FiberT fiber_t(const QuotientSurface& S, const Rat& t0);
FiberT fiber_t(const TwistPencil& P, const Rat& t0);

/// g(x) - y0^2 f(t) homogenized, with X = x, Y = t. Throws Domain when y0 = 0.
PlaneCubic fiber_y(const QuotientSurface& S, const Rat& y0);
/// (x, t) -> (x : t : 1) on fiber_y.
inline ProjPoint fiber_y_point(const Rat& x, const Rat& t) { return ProjPoint::affine(x, t); }

}  // namespace kf
