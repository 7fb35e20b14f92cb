#include "kf/param.hpp"

namespace kf {

namespace {

MPoly V(Var v, unsigned e = 1) { return MPoly::var(v, e); }
RatFunc R(const MPoly& p) { return RatFunc(p); }

// The variant's surface equation as (f(t), g(x)) polynomials in t and x over the symbols.
MPoly surface_f(const ParamFamily& F) {
    return V(Var::t, static_cast<unsigned>(F.t_degree())) + V(Var::c) * V(Var::t) + V(Var::d);
}

MPoly surface_g(const ParamFamily& F) {
    MPoly xn = V(Var::x, static_cast<unsigned>(F.n));
    switch (F.kind) {
    case FamilyKind::GeneralKN: return xn + V(Var::a) * V(Var::x) + V(Var::b);
    case FamilyKind::Quartic1728: return xn + V(Var::a) * V(Var::x);
    case FamilyKind::Sextic0: return xn + V(Var::b);
    }
    return {};
}

// Curve equation as lhs coefficient of y^k and right side.
MPoly curve_rhs(const ParamFamily& F) {
    switch (F.kind) {
    case FamilyKind::GeneralKN: return V(Var::a) * V(Var::x) + V(Var::b);
    case FamilyKind::Quartic1728: return V(Var::a) * V(Var::x);
    case FamilyKind::Sextic0: return V(Var::b);
    }
    return {};
}

MPoly curve_lhs_coeff() { return V(Var::c) * V(Var::t) + V(Var::d); }

RatFunc compose_xyt(const MPoly& p, const ParamFamily& F) {
    RatFunc r = R(p);
    r = r.subs(Var::x, F.x);
    r = r.subs(Var::y, F.y);
    r = r.subs(Var::t, F.t);
    return r;
}

Rat require(const Coeffs& c, Var v) {
    auto it = c.find(v);
    if (it == c.end()) throw Error(Errc::Domain, std::string("missing coefficient ") + var_name(v));
    return it->second;
}

}  // namespace

const char* family_name(FamilyKind k) {
    switch (k) {
    case FamilyKind::GeneralKN: return "general";
    case FamilyKind::Quartic1728: return "quartic";
    case FamilyKind::Sextic0: return "sextic";
    }
    return "?";
}

FamilyKind family_from_name(const std::string& s) {
    if (s == "general") return FamilyKind::GeneralKN;
    if (s == "quartic") return FamilyKind::Quartic1728;
    if (s == "sextic") return FamilyKind::Sextic0;
    throw Error(Errc::Parse, "unknown family '" + s + "' (expected general, quartic or sextic)");
}

int ParamFamily::t_degree() const {
    switch (kind) {
    case FamilyKind::GeneralKN: return n;
    case FamilyKind::Quartic1728: return 4;
    case FamilyKind::Sextic0: return 6;
    }
    return n;
}

std::vector<Var> ParamFamily::symbols() const {
    switch (kind) {
    case FamilyKind::GeneralKN: return {Var::a, Var::b, Var::c, Var::d};
    case FamilyKind::Quartic1728: return {Var::a, Var::c, Var::d};
    case FamilyKind::Sextic0: return {Var::b, Var::c, Var::d};
    }
    return {};
}

ParamFamily build_family(FamilyKind kind, int k, int n) {
    ParamFamily F;
    F.kind = kind;
    const MPoly a = V(Var::a), b = V(Var::b), c = V(Var::c), d = V(Var::d);
    switch (kind) {
    case FamilyKind::GeneralKN: {
        if (k < 2 || n < 2) throw Error(Errc::Domain, "GeneralKN needs k, n >= 2");
        F.k = k;
        F.n = n;
        const auto ku = static_cast<unsigned>(k), nu = static_cast<unsigned>(n);
        MPoly num = d * V(Var::u, ku * nu) - b;
        MPoly den = a - c * V(Var::u, ku * nu - ku);
        F.x = RatFunc(num, den);
        F.y = R(V(Var::u, nu));
        F.t = RatFunc(num, V(Var::u, ku) * den);
        break;
    }
    case FamilyKind::Quartic1728: {
        // x = ((d^2/c^4)u^8 - 2dau^4 + c^4a^2)/u^6, y = ((-d/c^4)u^4 + a)/u, t = ((-d/c)u^4 + c^3a)/u^4
        RatFunc c4 = R(c.pow(4));
        F.x = (R(d * d * V(Var::u, 8)) / c4 - R(Rat(2) * d * a * V(Var::u, 4)) + R(c.pow(4) * a * a)) / R(V(Var::u, 6));
        F.y = (-R(d * V(Var::u, 4)) / c4 + R(a)) / R(V(Var::u));
        F.t = (-R(d * V(Var::u, 4)) / R(c) + R(c.pow(3) * a)) / R(V(Var::u, 4));
        break;
    }
    case FamilyKind::Sextic0: {
        // x = ((d^2/(b^2c^2))u^12 - (2db^5/c^2)u^6 + b^12/c^2)/u^10, y = u^3/b^3, t = (b^7/c - (d/c)u^6)/u^6
        RatFunc c2 = R(c * c);
        F.x = (R(d * d * V(Var::u, 12)) / R(b * b * c * c) - R(Rat(2) * d * b.pow(5) * V(Var::u, 6)) / c2 +
               R(b.pow(12)) / c2) /
              R(V(Var::u, 10));
        F.y = R(V(Var::u, 3)) / R(b.pow(3));
        F.t = (R(b.pow(7)) / R(c) - R(d * V(Var::u, 6)) / R(c)) / R(V(Var::u, 6));
        break;
    }
    }
    return F;
}

IdentityReport verify_family_identities(const ParamFamily& F) {
    IdentityReport rep;
    const unsigned ku = static_cast<unsigned>(F.k);
    RatFunc curve = compose_xyt(curve_lhs_coeff() * V(Var::y, ku) - curve_rhs(F), F);
    RatFunc surface = compose_xyt(surface_f(F) * V(Var::y, ku) - surface_g(F), F);
    rep.curve_residual = curve.num();
    rep.surface_residual = surface.num();
    rep.verified = curve.is_zero() && surface.is_zero();
    if (F.kind == FamilyKind::GeneralKN) {
        // r = x/t satisfies t r (c r^(n-1) - a) = b - d r^n and y^k = r^n.
        RatFunc r = F.x / F.t;
        const unsigned nu = static_cast<unsigned>(F.n);
        RatFunc plane = F.t * r * (R(V(Var::c)) * r.pow(nu - 1) - R(V(Var::a))) - (R(V(Var::b)) - R(V(Var::d)) * r.pow(nu));
        RatFunc power = F.y.pow(ku) - r.pow(nu);
        rep.plane_residual = plane.num() + power.num();
        rep.verified = rep.verified && plane.is_zero() && power.is_zero();
    }
    return rep;
}

namespace {

void check_constraints(const ParamFamily& F, const Coeffs& c) {
    for (Var v : F.symbols()) require(c, v);
    auto nz = [&](Var v) {
        if (require(c, v).is_zero()) throw Error(Errc::Domain, std::string(family_name(F.kind)) + " family needs " + var_name(v) + " != 0");
    };
    switch (F.kind) {
    case FamilyKind::GeneralKN:
        build_quotient_surface(F.k, F.n, require(c, Var::a), require(c, Var::b), require(c, Var::c), require(c, Var::d));
        break;
    case FamilyKind::Quartic1728:
        nz(Var::a);
        nz(Var::c);
        nz(Var::d);
        break;
    case FamilyKind::Sextic0:
        nz(Var::b);
        nz(Var::c);
        break;
    }
}

Rat eval_component(const RatFunc& f, const char* name, std::map<Var, Rat> at) {
    Rat den = f.den().eval(at);
    if (den.is_zero())
        throw Error(Errc::Pole, std::string("pole of ") + name + "(u): denominator " + f.den().str() + " vanishes");
    return f.num().eval(at) / den;
}

}  // namespace

ParamPoint eval_family(const ParamFamily& F, const Coeffs& coeffs, const Rat& u) {
    check_constraints(F, coeffs);
    if (u.is_zero()) throw Error(Errc::Pole, "u = 0 is a pole of the parametrization");
    std::map<Var, Rat> at;
    for (Var v : F.symbols()) at[v] = coeffs.at(v);
    at[Var::u] = u;
    return {eval_component(F.x, "x", at), eval_component(F.y, "y", at), eval_component(F.t, "t", at)};
}

bool family_surface_contains(const ParamFamily& F, const Coeffs& coeffs, const ParamPoint& p) {
    std::map<Var, Rat> at(coeffs.begin(), coeffs.end());
    at[Var::x] = p.x;
    at[Var::y] = p.y;
    at[Var::t] = p.t;
    return (surface_f(F) * V(Var::y, static_cast<unsigned>(F.k)) - surface_g(F)).eval(at).is_zero();
}

bool family_curve_contains(const ParamFamily& F, const Coeffs& coeffs, const ParamPoint& p) {
    std::map<Var, Rat> at(coeffs.begin(), coeffs.end());
    at[Var::x] = p.x;
    at[Var::y] = p.y;
    at[Var::t] = p.t;
    return (curve_lhs_coeff() * V(Var::y, static_cast<unsigned>(F.k)) - curve_rhs(F)).eval(at).is_zero();
}

QuotientSurface family_surface(const ParamFamily& F, const Coeffs& coeffs) {
    if (F.kind != FamilyKind::GeneralKN) throw Error(Errc::Domain, "family_surface needs a GeneralKN family");
    return build_quotient_surface(F.k, F.n, require(coeffs, Var::a), require(coeffs, Var::b), require(coeffs, Var::c),
                                  require(coeffs, Var::d));
}

TwistPencil family_pencil(const ParamFamily& F, const Coeffs& coeffs) {
    check_constraints(F, coeffs);
    if (F.kind == FamilyKind::Quartic1728)
        return build_twist_pencil(WeierstrassCurve(require(coeffs, Var::a), Rat(0)), 4, coeffs.at(Var::c), coeffs.at(Var::d));
    if (F.kind == FamilyKind::Sextic0)
        return build_twist_pencil(WeierstrassCurve(Rat(0), require(coeffs, Var::b)), 6, coeffs.at(Var::c), coeffs.at(Var::d));
    throw Error(Errc::Domain, "family_pencil needs a quartic or sextic family");
}

}  // namespace kf
