#include "kf/elliptic.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "kf/factor.hpp"

namespace kf {

WeierstrassCurve::WeierstrassCurve(Rat a, Rat b) : A(std::move(a)), B(std::move(b)) {
    if ((Rat(4) * A * A * A + Rat(27) * B * B).is_zero())
        throw Error(Errc::Singular, "singular Weierstrass curve A=" + A.str() + " B=" + B.str());
}

Rat WeierstrassCurve::discriminant() const { return Rat(-16) * (Rat(4) * A * A * A + Rat(27) * B * B); }

bool WeierstrassCurve::contains(const Rat& x, const Rat& y) const { return y * y == x * x * x + A * x + B; }

const Rat& ECPoint::x() const {
    if (inf_) throw Error(Errc::Domain, "point at infinity has no affine coordinates");
    return x_;
}

const Rat& ECPoint::y() const {
    if (inf_) throw Error(Errc::Domain, "point at infinity has no affine coordinates");
    return y_;
}

namespace {

void require_on(const WeierstrassCurve& E, const ECPoint& P) {
    if (!P.is_infinity() && !E.contains(P.x(), P.y()))
        throw Error(Errc::NotOnCurve, "point (" + P.x().str() + ", " + P.y().str() + ") is not on the curve");
}

ECPoint add_unchecked(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    Rat lambda;
    if (P.x() == Q.x()) {
        if (P.y() == -Q.y()) return ECPoint::infinity();  // vertical line, includes 2-torsion doubling
        lambda = (Rat(3) * P.x() * P.x() + E.A) / (Rat(2) * P.y());
    } else {
        lambda = (Q.y() - P.y()) / (Q.x() - P.x());
    }
    Rat x3 = lambda * lambda - P.x() - Q.x();
    Rat y3 = lambda * (P.x() - x3) - P.y();
    return ECPoint(std::move(x3), std::move(y3));
}

ECPoint mul_unchecked(const WeierstrassCurve& E, long n, const ECPoint& P) {
    if (n < 0) return mul_unchecked(E, -n, P).negated();
    ECPoint acc = ECPoint::infinity(), base = P;
    auto k = static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) acc = add_unchecked(E, acc, base);
        k >>= 1;
        if (k) base = add_unchecked(E, base, base);
    }
    return acc;
}

}  // namespace

ECPoint ec_add(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q) {
    require_on(E, P);
    require_on(E, Q);
    return add_unchecked(E, P, Q);
}

ECPoint ec_mul(const WeierstrassCurve& E, long n, const ECPoint& P) {
    require_on(E, P);
    return mul_unchecked(E, n, P);
}

IntegralModel to_integral_model(const WeierstrassCurve& E, const ECPoint& P) {
    require_on(E, P);
    // Required valuation of lambda at each prime (or unsplit cofactor).
    std::map<Int, unsigned long> need;
    bool minimal = true;
    const unsigned bits = factor_bits_from_env();
    auto absorb = [&](const Int& den, unsigned long weight) {
        if (den == 1) return;
        auto f = factor_integer(den, bits);
        minimal = minimal && f.complete();
        auto visit = [&](const Int& p, unsigned e) {
            unsigned long k = (e + weight - 1) / weight;
            auto& slot = need[p];
            slot = std::max(slot, k);
        };
        for (auto& [p, e] : f.factors) visit(p, e);
        for (auto& [p, e] : f.unresolved) visit(p, e);
    };
    absorb(E.A.den(), 4);
    absorb(E.B.den(), 6);
    Int lambda = 1;
    for (auto& [p, k] : need) lambda *= ipow(p, k);
    Rat l(lambda);
    Rat l2 = l * l, l3 = l2 * l;
    WeierstrassCurve C(E.A * l2 * l2, E.B * l3 * l3);
    ECPoint Q = P.is_infinity() ? P : ECPoint(P.x() * l2, P.y() * l3);
    return IntegralModel{C, Q, l, minimal};
}

Twist quadratic_twist(const WeierstrassCurve& E, const Rat& q) {
    if (q.is_zero()) throw Error(Errc::Domain, "quadratic twist by zero");
    Rat q2 = q * q;
    return Twist{WeierstrassCurve(q2 * E.A, q2 * q * E.B), q};
}

const char* method_name(NonTorsionMethod m) {
    return m == NonTorsionMethod::LutzNagellNonIntegral ? "lutz-nagell" : "mazur-multiples";
}

TorsionVerdict TorsionVerdict::torsion_of(int order, std::string evidence) {
    TorsionVerdict v;
    v.torsion = true;
    v.order = order;
    v.evidence = std::move(evidence);
    return v;
}

TorsionVerdict TorsionVerdict::non_torsion(NonTorsionMethod m, std::string evidence) {
    TorsionVerdict v;
    v.method = m;
    v.evidence = std::move(evidence);
    return v;
}

namespace {

// Pairwise coprime b_i with den(A), den(B) products of their powers (factor refinement);
// lambda = prod b_i^max(ceil(e_A / 4), ceil(e_B / 6)) makes the model integral.
Int refined_scale(const WeierstrassCurve& E) {
    std::vector<Int> base;
    for (const Int& d : {E.A.den(), E.B.den()})
        if (d != 1) base.push_back(d);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < base.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
                Int g;
                mpz_gcd(g.get_mpz_t(), base[i].get_mpz_t(), base[j].get_mpz_t());
                if (g == 1) continue;
                Int a = base[i] / g, b = base[j] / g;
                base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
                base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
                for (Int* v : {&a, &g, &b})
                    if (*v != 1) base.push_back(*v);
                changed = true;
            }
    }
    auto val = [](Int n, const Int& b) {
        unsigned long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), b.get_mpz_t())) {
            n /= b;
            ++e;
        }
        return e;
    };
    Int lambda = 1;
    for (const Int& b : base) {
        unsigned long k = std::max((val(E.A.den(), b) + 3) / 4, (val(E.B.den(), b) + 5) / 6);
        lambda *= ipow(b, k);
    }
    return lambda;
}

}  // namespace

TorsionVerdict torsion_test(const WeierstrassCurve& E, const ECPoint& P) {
    if (P.is_infinity()) throw Error(Errc::Domain, "torsion_test: point at infinity");
    require_on(E, P);
    {
        // Lutz-Nagell holds on any integral model; this one needs gcds only.
        Rat l(refined_scale(E));
        Rat l2 = l * l;
        if (!(P.x() * l2).is_integer() || !(P.y() * l2 * l).is_integer())
            return TorsionVerdict::non_torsion(NonTorsionMethod::LutzNagellNonIntegral,
                                               "P non-integral on integral model lambda from a coprime base of den(A), den(B)");
    }
    IntegralModel m = to_integral_model(E, P);
    const WeierstrassCurve& C = m.curve;
    const ECPoint& Q = m.point;
    const std::string model = "integral model lambda=" + m.scale.str();
    if (!Q.is_integral())
        return TorsionVerdict::non_torsion(NonTorsionMethod::LutzNagellNonIntegral,
                                           "P non-integral on " + model);
    if (!Q.y().is_zero()) {
        Int d = (Rat(4) * C.A * C.A * C.A + Rat(27) * C.B * C.B).num();
        Int y2 = Q.y().num() * Q.y().num();
        if (!mpz_divisible_p(d.get_mpz_t(), y2.get_mpz_t()))
            return TorsionVerdict::non_torsion(NonTorsionMethod::LutzNagellNonIntegral,
                                               "y(P)^2 does not divide 4A^3+27B^2 on " + model);
    }
    ECPoint twice = add_unchecked(C, Q, Q);
    if (!twice.is_integral())
        return TorsionVerdict::non_torsion(NonTorsionMethod::LutzNagellNonIntegral,
                                           "2P non-integral on " + model);
    ECPoint acc = Q;
    for (int n = 2; n <= kMazurBound; ++n) {
        acc = add_unchecked(C, acc, Q);
        if (acc.is_infinity())
            return TorsionVerdict::torsion_of(n, std::to_string(n) + "P = O by explicit multiples");
    }
    return TorsionVerdict::non_torsion(NonTorsionMethod::MazurMultiples,
                                       "nP != O for 2 <= n <= 12");
}

}  // namespace kf
