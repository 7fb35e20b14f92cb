#include "kf/twist.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kf/factor.hpp"

namespace kf {

Int KthPowerFreeClass::representative() const {
    Int r = sign;
    for (const auto& [p, e] : factors) r *= ipow(p, e);
    return r;
}

std::string KthPowerFreeClass::str() const {
    std::string s = sign < 0 ? "-1" : "1";
    for (const auto& [p, e] : factors) s += "*" + p.get_str() + (e > 1 ? "^" + std::to_string(e) : "");
    return s + " mod " + std::to_string(k) + "th powers";
}

KthPowerFreeClass kth_power_free_class(const Rat& q, int k) {
    if (q.is_zero()) throw Error(Errc::Domain, "class of zero");
    if (k < 2) throw Error(Errc::Domain, "class needs k >= 2");
    const unsigned bits = factor_bits_from_env();
    const auto ku = static_cast<unsigned>(k);
    std::map<Int, unsigned> exps;
    auto absorb = [&](const Int& n, bool inverted) {
        if (n == 1) return;
        Factorization f = factor_integer(n, bits);
        if (!f.complete())
            throw Error(Errc::FactorLimit, "cofactor " + f.unresolved.front().first.get_str() + " exceeds " +
                                               std::to_string(bits) + " bits");
        for (const auto& [p, e] : f.factors) {
            unsigned r = e % ku;
            exps[p] = (exps[p] + (inverted ? (ku - r) % ku : r)) % ku;
        }
    };
    absorb(abs(q.num()), false);
    absorb(q.den(), true);
    KthPowerFreeClass c;
    c.k = k;
    c.sign = (q.sign() < 0 && k % 2 == 0) ? -1 : 1;
    for (const auto& [p, e] : exps)
        if (e) c.factors.emplace_back(p, e);
    return c;
}

namespace {

void require_match(const QuotientSurface& S, const ParamFamily& F) {
    if (F.kind != FamilyKind::GeneralKN || F.k != S.k || F.n != S.n)
        throw Error(Errc::Domain, "family does not match the surface's (k, n)");
}

Coeffs surface_coeffs(const QuotientSurface& S) { return {{Var::a, S.a}, {Var::b, S.b}, {Var::c, S.c}, {Var::d, S.d}}; }

}  // namespace

UClass twist_class_of_u(const QuotientSurface& S, const ParamFamily& F, const Rat& u) {
    require_match(S, F);
    ParamPoint p = eval_family(F, surface_coeffs(S), u);
    Rat l = S.f().eval(p.t);
    if (l.is_zero() || p.y.is_zero()) throw Error(Errc::Domain, "f(t(u)) or y(u) vanishes at u = " + u.str());
    KthPowerFreeClass c = kth_power_free_class(l, S.k);
    if (kth_power_free_class(S.g().eval(p.x), S.k) != c)
        throw Error(Errc::Internal, "classes of f(t(u)) and g(x(u)) differ at u = " + u.str());
    return {c, l};
}

bool verify_twist_witness(const QuotientSurface& S, const TwistPairWitness& w) {
    if (w.l.is_zero()) return false;
    return w.l * w.y1.pow(S.k) == S.g().eval(w.x) && w.l * w.y2.pow(S.k) == S.f().eval(w.t);
}

std::vector<Rat> enumerate_by_height(long H) {
    std::vector<Rat> out;
    for (long m = 1; m <= H; ++m) {
        // |p| < m forces q = m; |p| = m allows q = 1..m.
        for (long p = 0; p <= m; ++p) {
            for (long q = 1; q <= m; ++q) {
                if (std::max(p, q) != m || std::gcd(p, q) != 1) continue;
                if (p == 0) continue;
                out.emplace_back(Int(p), Int(q));
                out.emplace_back(Int(-p), Int(q));
            }
        }
    }
    return out;
}

TwistSearch simultaneous_twists(const QuotientSurface& S, const ParamFamily& F, int want, long height_bound) {
    require_match(S, F);
    if (S.excluded_case) throw Error(Errc::Domain, "excluded case a = c = 0 or b = d = 0");
    TwistSearch out;
    if (want <= 0) return out;
    const Coeffs co = surface_coeffs(S);
    std::vector<KthPowerFreeClass> seen;
    for (const Rat& u : enumerate_by_height(height_bound)) {
        ++out.candidates;
        ParamPoint p;
        try {
            p = eval_family(F, co, u);
        } catch (const Error& e) {
            if (e.code() != Errc::Pole) throw;
            continue;
        }
        Rat l = S.f().eval(p.t);
        if (l.is_zero() || p.y.is_zero()) continue;
        KthPowerFreeClass c;
        try {
            c = twist_class_of_u(S, F, u).cls;
        } catch (const Error& e) {
            if (e.code() != Errc::FactorLimit) throw;
            out.skipped.push_back("u = " + u.str() + ": " + e.what());
            continue;
        }
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
        TwistPairWitness w{u, l, c, p.x, p.y, p.t, Rat(1)};
        if (!verify_twist_witness(S, w)) throw Error(Errc::Internal, "witness failed re-verification at u = " + u.str());
        seen.push_back(c);
        out.witnesses.push_back(std::move(w));
        if (static_cast<int>(out.witnesses.size()) >= want) return out;
    }
    out.shortfall = true;
    return out;
}

}  // namespace kf
