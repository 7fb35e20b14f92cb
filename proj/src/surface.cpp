#include "kf/surface.hpp"

#include <numeric>

namespace kf {

namespace {

UPoly trinomial(int n, const Rat& lin, const Rat& cst) {
    UPoly p = UPoly::monomial(Rat(1), static_cast<std::size_t>(n));
    return p + UPoly{cst, lin};
}

}  // namespace

UPoly QuotientSurface::g() const { return trinomial(n, a, b); }
UPoly QuotientSurface::f() const { return trinomial(n, c, d); }

QuotientSurface build_quotient_surface(int k, int n, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    if (k < 2 || n < 2) throw Error(Errc::Domain, "surface needs k, n >= 2");
    if (a.is_zero() && b.is_zero()) throw Error(Errc::Domain, "surface needs a or b nonzero");
    if (c.is_zero() && d.is_zero()) throw Error(Errc::Domain, "surface needs c or d nonzero");
    QuotientSurface S;
    S.k = k;
    S.n = n;
    S.a = a;
    S.b = b;
    S.c = c;
    S.d = d;
    S.kn_coprime = std::gcd(k, n) == 1;
    S.irreducibility_term = !(a.pow(n) * d.pow(n - 1) - b.pow(n - 1) * c.pow(n)).is_zero();
    S.excluded_case = (a.is_zero() && c.is_zero()) || (b.is_zero() && d.is_zero());
    return S;
}

bool surface_contains(const QuotientSurface& S, const Rat& x, const Rat& y, const Rat& t) {
    return S.f().eval(t) * y.pow(S.k) == S.g().eval(x);
}

UPoly TwistPencil::g() const { return UPoly{curve.B, curve.A, Rat(0), Rat(1)}; }
UPoly TwistPencil::f() const { return trinomial(degree, c, d); }

bool TwistPencil::hypotheses_hold() const {
    if (degree == 4) return !curve.A.is_zero() && !c.is_zero() && !d.is_zero();
    return !curve.B.is_zero() && !c.is_zero();
}

TwistPencil build_twist_pencil(const WeierstrassCurve& E, int degree, const Rat& c, const Rat& d) {
    if (degree == 4 && !E.B.is_zero()) throw Error(Errc::Domain, "degree-4 pencil needs B = 0");
    if (degree == 6 && !E.A.is_zero()) throw Error(Errc::Domain, "degree-6 pencil needs A = 0");
    if (degree != 4 && degree != 6) throw Error(Errc::Domain, "pencil degree must be 4 or 6");
    return TwistPencil{E, degree, c, d};
}

namespace {

FiberT make_fiber(const Rat& A, const Rat& B, const Rat& q, const Rat& t0) {
    if (q.is_zero()) throw Error(Errc::DegenerateFiber, "f(t0) = 0 at t0 = " + t0.str());
    return FiberT{t0, quadratic_twist(WeierstrassCurve(A, B), q)};
}

}  // namespace

FiberT fiber_t(const QuotientSurface& S, const Rat& t0) {
    if (!S.is_kummer()) throw Error(Errc::Domain, "fiber_t needs k = 2, n = 3");
    return make_fiber(S.a, S.b, S.f().eval(t0), t0);
}

FiberT fiber_t(const TwistPencil& P, const Rat& t0) { return make_fiber(P.curve.A, P.curve.B, P.f().eval(t0), t0); }

PlaneCubic fiber_y(const QuotientSurface& S, const Rat& y0) {
    if (!S.is_kummer()) throw Error(Errc::Domain, "fiber_y needs k = 2, n = 3");
    if (y0.is_zero()) throw Error(Errc::Domain, "fiber_y needs y0 != 0");
    Rat w = y0 * y0;
    std::array<Rat, 10> c;
    c[0] = Rat(1);        // X^3
    c[5] = S.a;           // XZ^2
    c[6] = -w;            // Y^3
    c[8] = -w * S.c;      // YZ^2
    c[9] = S.b - w * S.d; // Z^3
    return PlaneCubic(c);
}

}  // namespace kf
