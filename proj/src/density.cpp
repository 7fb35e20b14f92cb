#include "kf/density.hpp"

#include <algorithm>

#include "kf/roots.hpp"

namespace kf {

namespace {

struct Shape {
    Rat shift;  // -d/c
    Rat K;
    long e;
};

Shape shape_of(const ParamFamily& F, const Coeffs& co) {
    auto get = [&](Var v) {
        auto it = co.find(v);
        if (it == co.end()) throw Error(Errc::Domain, std::string("missing coefficient ") + var_name(v));
        return it->second;
    };
    if (F.kind == FamilyKind::GeneralKN) throw Error(Errc::Domain, "density search needs the quartic or sextic family");
    Rat c = get(Var::c), d = get(Var::d);
    if (c.is_zero()) throw Error(Errc::Domain, "density search needs c != 0");
    if (F.kind == FamilyKind::Quartic1728) {
        Rat a = get(Var::a);
        if (a.is_zero() || d.is_zero()) throw Error(Errc::Domain, "quartic family needs a, d != 0");
        return {-d / c, c.pow(3) * a, 4};
    }
    Rat b = get(Var::b);
    if (b.is_zero()) throw Error(Errc::Domain, "sextic family needs b != 0");
    return {-d / c, b.pow(7) / c, 6};
}

// (den, |num|) order: the simplest rational of an interval is its minimum.
bool simpler(const Rat& a, const Rat& b) {
    if (a.den() != b.den()) return a.den() < b.den();
    return abs(a.num()) < abs(b.num());
}

Int point_size(const ProjPoint& p) {
    Int s = 0;
    for (const auto& c : p.coords()) s = std::max(s, c.height());
    return s;
}

PlaneCubic separated_cubic(const UPoly& g, const Rat& w, const UPoly& f) {
    // g(X, Z) - w f(Y, Z) for cubics g and f.
    std::array<Rat, 10> c;
    c[0] = g.coeff(3);
    c[2] = g.coeff(2);
    c[5] = g.coeff(1);
    c[6] = -w * f.coeff(3);
    c[7] = -w * f.coeff(2);
    c[8] = -w * f.coeff(1);
    c[9] = g.coeff(0) - w * f.coeff(0);
    return PlaneCubic(c);
}

bool no_odd_real_roots(const UPoly& f) {
    // Yun: p_i collects the roots of multiplicity exactly i.
    UPoly a = gcd(f, f.derivative());
    UPoly b = f / a;
    for (int i = 1; b.degree() > 0; ++i) {
        UPoly c = gcd(a, b);
        UPoly p = b / c;
        if (i % 2 == 1 && !isolate_real_roots(p).empty()) return false;
        b = c;
        a = a / c;
    }
    return true;
}

}  // namespace

OpenInterval half_interval(const ParamFamily& F, const Coeffs& coeffs) {
    Shape s = shape_of(F, coeffs);
    if (s.K.sign() > 0) return {s.shift, std::nullopt};
    return {std::nullopt, s.shift};
}

ApproxU approximate_u_for_t(const ParamFamily& F, const Coeffs& coeffs, const Rat& t1, const Rat& epsilon,
                            const std::vector<Rat>& excluded) {
    Shape s = shape_of(F, coeffs);
    if (epsilon.sign() <= 0) throw Error(Errc::Domain, "epsilon must be positive");
    if (!half_interval(F, coeffs).contains(t1))
        throw Error(Errc::Domain, "t1 = " + t1.str() + " is outside the open half-interval of t(u)");
    auto t_of = [&](const Rat& u) { return s.shift + s.K / u.pow(s.e); };
    auto where = [&](const Rat& u) {
        Rat diff = t_of(u) - t1;
        if (diff.abs() < epsilon) return Where::Inside;
        // t(u) is decreasing in u when K > 0.
        bool too_high = diff.sign() > 0;
        return (too_high == (s.K.sign() > 0)) ? Where::Left : Where::Right;
    };
    auto bad = [&](const Rat& u) {
        if (std::find(excluded.begin(), excluded.end(), u) != excluded.end()) return true;
        try {
            return eval_family(F, coeffs, u).y.is_zero();
        } catch (const Error& e) {
            if (e.code() == Errc::Pole) return true;
            throw;
        }
    };
    struct Piece {
        std::optional<Rat> lo, hi;
    };
    std::vector<Piece> stack{{}};
    std::optional<Rat> best;
    while (!stack.empty()) {
        Piece p = stack.back();
        stack.pop_back();
        Rat u = simplest_positive([&](const Rat& v) {
            if (p.lo && v <= *p.lo) return Where::Left;
            if (p.hi && v >= *p.hi) return Where::Right;
            return where(v);
        });
        if (best && simpler(*best, u)) continue;  // nothing in this piece beats the current best
        if (bad(u)) {
            stack.push_back({p.lo, u});
            stack.push_back({u, p.hi});
            continue;
        }
        best = u;
    }
    Rat t = t_of(*best);
    return {*best, t, (t - t1).abs()};
}

DensityWitness pencil_density_witness(const TwistPencil& P, const ParamFamily& F, const Coeffs& coeffs, const Rat& t1,
                                      const Rat& epsilon, const DensityCaps& caps) {
    std::vector<Rat> failed;
    const bool nonneg = no_odd_real_roots(P.f());
    for (int attempt = 0; attempt < caps.retries; ++attempt) {
        ApproxU a = approximate_u_for_t(F, coeffs, t1, epsilon, failed);
        ParamPoint pt = eval_family(F, coeffs, a.u);
        Rat q = P.f().eval(pt.t);
        if (q.is_zero()) {
            failed.push_back(a.u);
            continue;
        }
        FiberT fib = fiber_t(P, pt.t);
        ECPoint X = fib.transport(pt.x, pt.y);
        TorsionVerdict v = torsion_test(fib.curve(), X);
        if (v.torsion) {
            failed.push_back(a.u);
            continue;
        }
        DensityWitness w;
        w.kind = "pencil";
        w.t1 = t1;
        w.epsilon = epsilon;
        w.t_prime = pt.t;
        w.error = a.error;
        w.u = a.u;
        w.x = pt.x;
        w.y = pt.y;
        w.fiber = fib.curve();
        w.fiber_point = X;
        w.certificate = v;
        w.f_nonnegative = nonneg;
        return w;
    }
    throw Error(Errc::CapExceeded, "no certified witness after " + std::to_string(caps.retries) + " attempts");
}

namespace {

struct WalkHit {
    DensityWitness w;
    Int size;
};

}  // namespace

DensityOutcome kummer_density_witness(const QuotientSurface& S, const Rat& x0, const Rat& y0, const Rat& t0,
                                      const Rat& t1, const Rat& epsilon, const DensityCaps& caps) {
    if (!S.is_kummer()) throw Error(Errc::Domain, "Kummer witnesses need k = 2, n = 3");
    if (epsilon.sign() <= 0) throw Error(Errc::Domain, "epsilon must be positive");
    if (!surface_contains(S, x0, y0, t0)) throw Error(Errc::NotOnCurve, "seed is not on the surface");
    if (y0.is_zero()) throw Error(Errc::SeedTorsion, "seed has y = 0, a 2-torsion point of its K_t fiber");
    const UPoly g = S.g(), f = S.f();
    FiberT base = fiber_t(S, t0);
    const ECPoint P = base.transport(x0, y0);
    if (torsion_test(base.curve(), P).torsion) throw Error(Errc::SeedTorsion, "seed is torsion on its K_t fiber");
    const bool three = SturmSequence(g).count_total() == 3;

    DensityOutcome out;
    // (1) Pick a multiple whose y gives a usable K_y fiber.
    std::optional<std::pair<ProjPoint, Rat>> chosen;
    ChordTorsionVerdict chord_cert;
    long chosen_m = 0;
    ECPoint Q = ECPoint::infinity();
    long scanned = 0;
    for (long m = 1; m <= caps.multiples && !chosen; ++m) {
        Q = ec_add(base.curve(), Q, P);
        if (Q.is_infinity()) break;
        if (Q.x().bits() + Q.y().bits() > static_cast<std::size_t>(caps.max_bits)) break;
        scanned = m;
        auto [x, y] = base.twist.backward(Q);
        try {
            if (census_fiber_y(S, y).count != 1) continue;
            if (!assumption_bounds_check(g, f, t1, y)) continue;
            PlaneCubic C = fiber_y(S, y);
            if (!cubic_is_smooth(C)) continue;
            ChordTorsionVerdict v = chord_torsion_test(C, fiber_y_point(x, t0));
            if (v.torsion) continue;
            chosen = std::make_pair(fiber_y_point(x, t0), y);
            chord_cert = std::move(v);
            chosen_m = m;
        } catch (const Error& e) {
            if (e.code() != Errc::Singular) throw;
        }
    }
    if (!chosen) {
        out.reason = "no multiple m <= " + std::to_string(scanned) + " of the seed gives a usable K_y fiber";
        return out;
    }
    const Rat yv = chosen->second;
    const PlaneCubic C = fiber_y(S, yv);
    const ProjPoint P0 = chosen->first;
    const ProjPoint T = chord(C, P0, P0);

    // (2) Walk Q_n in both directions and certify hits.
    std::optional<WalkHit> best;
    int failures = 0;
    ProjPoint fwd = P0, back = P0;
    long nf = 0, nb = 0;
    bool fwd_done = false, back_done = false;
    auto consider = [&](const ProjPoint& Qn, long n) {
        if (Qn.at_infinity()) return;
        const Rat& x = Qn.X();
        const Rat& t = Qn.Y();
        Rat err = (t - t1).abs();
        if (!(err < epsilon)) return;
        Int size = point_size(Qn);
        if (best && best->size <= size) return;
        if (f.eval(t).is_zero()) return;
        FiberT fib = fiber_t(S, t);
        ECPoint X = fib.transport(x, yv);
        TorsionVerdict v = torsion_test(fib.curve(), X);
        bool ok = !v.torsion;
        if (ok && three) ok = oval_contains(census_fiber_t(g, f, t), x);
        if (!ok) {
            ++failures;
            return;
        }
        DensityWitness w;
        w.kind = "kummer";
        w.t1 = t1;
        w.epsilon = epsilon;
        w.t_prime = t;
        w.error = err;
        w.x = x;
        w.y = yv;
        w.fiber = fib.curve();
        w.fiber_point = X;
        w.certificate = v;
        w.multiple = chosen_m;
        w.chord_index = n;
        w.chord_certificate = chord_cert;
        w.three_roots = three;
        best = WalkHit{std::move(w), size};
    };
    consider(P0, 0);
    long steps = 0;
    while (steps < caps.chord_steps && failures < caps.retries && !(fwd_done && back_done)) {
        for (int dir = 0; dir < 2 && steps < caps.chord_steps; ++dir) {
            bool forward = dir == 0;
            if (forward ? fwd_done : back_done) continue;
            ProjPoint& cur = forward ? fwd : back;
            cur = forward ? chord_next(C, cur, P0, T) : chord_prev(C, cur, P0, T);
            long n = forward ? ++nf : -(++nb);
            ++steps;
            consider(cur, n);
            Int size = point_size(cur);
            if ((best && size > best->size) || mpz_sizeinbase(size.get_mpz_t(), 2) > static_cast<std::size_t>(caps.max_bits))
                (forward ? fwd_done : back_done) = true;
        }
    }
    out.steps = steps;
    if (best) {
        out.found = true;
        out.witness = std::move(best->w);
        return out;
    }
    out.reason = failures >= caps.retries
                     ? "certification failed " + std::to_string(failures) + " times"
                 : (fwd_done && back_done)
                     ? "coordinates exceeded " + std::to_string(caps.max_bits) + " bits after " + std::to_string(steps) + " steps"
                     : "no chord-walk point within epsilon after " + std::to_string(steps) + " steps";
    return out;
}

std::string verify_density_witness(const DensityWitness& w, const UPoly& g, const UPoly& f) {
    Rat q = f.eval(w.t_prime);
    if (q.is_zero()) return "f(t') = 0";
    if (q * w.y * w.y != g.eval(w.x)) return "point is not on the K_t' fiber";
    if (!((w.t_prime - w.t1).abs() < w.epsilon)) return "|t' - t1| >= epsilon";
    if (w.error != (w.t_prime - w.t1).abs()) return "recorded error differs";
    Twist tw = quadratic_twist(WeierstrassCurve(g.coeff(1), g.coeff(0)), q);
    if (!(tw.curve == w.fiber)) return "fiber curve differs";
    if (!(tw.forward(w.x, w.y) == w.fiber_point)) return "fiber point differs";
    TorsionVerdict v = torsion_test(w.fiber, w.fiber_point);
    if (v.torsion) return "fiber point is torsion";
    if (v.method != w.certificate.method || v.evidence != w.certificate.evidence || w.certificate.torsion)
        return "certificate does not reproduce";
    if (w.kind == "pencil" && w.f_nonnegative != no_odd_real_roots(f)) return "f_nonnegative flag is wrong";
    if (w.kind == "kummer") {
        if (!w.chord_certificate || w.chord_certificate->points.empty()) return "missing chord certificate";
        PlaneCubic C = separated_cubic(g, w.y * w.y, f);
        if (!C.contains(fiber_y_point(w.x, w.t_prime))) return "point is not on the K_y fiber";
        ChordTorsionVerdict cv = chord_torsion_test(C, w.chord_certificate->points.front());
        if (cv.torsion || cv.points != w.chord_certificate->points) return "chord certificate does not reproduce";
        if (w.three_roots) {
            auto cen = census_fiber_t(g, f, w.t_prime);
            if (!oval_contains(cen, w.x)) return "point is off the oval";
        }
    }
    return "";
}

}  // namespace kf
