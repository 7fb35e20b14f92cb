#include <doctest.h>

#include <random>

#include "kf/density.hpp"

using namespace kf;

namespace {

Coeffs quartic_coeffs(long a, long c, long d) { return {{Var::a, Rat(a)}, {Var::c, Rat(c)}, {Var::d, Rat(d)}}; }
Coeffs sextic_coeffs(long b, long c, long d) { return {{Var::b, Rat(b)}, {Var::c, Rat(c)}, {Var::d, Rat(d)}}; }

}  // namespace

TEST_CASE("half interval and simplest u") {
    auto F = build_family(FamilyKind::Quartic1728);
    auto co = quartic_coeffs(1, 1, 1);
    auto I = half_interval(F, co);
    CHECK(I.lo == Rat(-1));
    CHECK(!I.hi);
    auto a = approximate_u_for_t(F, co, Rat(1), Rat::parse("1/10"));
    CHECK(a.u == Rat::parse("5/6"));
    CHECK(a.t == Rat::parse("671/625"));
    CHECK(a.error == Rat::parse("46/625"));
    CHECK_THROWS_AS(approximate_u_for_t(F, co, Rat(-1), Rat(1)), Error);
    CHECK_THROWS_AS(approximate_u_for_t(F, co, Rat(-2), Rat(1)), Error);
    CHECK_THROWS_AS(approximate_u_for_t(F, co, Rat(1), Rat(0)), Error);
    // u = 1 has u^4 = a c^4 / d, a pole of x(u).
    CHECK(approximate_u_for_t(F, co, Rat(0), Rat(1)).u == Rat(2));
    // Negative K flips the half line.
    auto neg = quartic_coeffs(-1, 1, 1);
    CHECK(half_interval(F, neg).hi == Rat(-1));
    auto b = approximate_u_for_t(F, neg, Rat(-3), Rat::parse("1/10"));
    CHECK((b.t - Rat(-3)).abs() < Rat::parse("1/10"));
}

TEST_CASE("error is monotone under halving epsilon") {
    std::mt19937_64 rng(11);
    for (auto kind : {FamilyKind::Quartic1728, FamilyKind::Sextic0}) {
        auto F = build_family(kind);
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<long> dist(-4, 4);
            long p = dist(rng), c = dist(rng), d = dist(rng);
            if (p == 0 || c == 0 || d == 0) continue;
            Coeffs co = kind == FamilyKind::Quartic1728 ? quartic_coeffs(p, c, d) : sextic_coeffs(p, c, d);
            auto I = half_interval(F, co);
            Rat t1 = I.lo ? *I.lo + Rat(trial % 5 + 1, 3) : *I.hi - Rat(trial % 5 + 1, 3);
            Rat eps(1);
            Rat prev(-1);
            for (int k = 0; k < 12; ++k, eps /= Rat(2)) {
                auto a = approximate_u_for_t(F, co, t1, eps);
                CHECK(a.error < eps);
                CHECK(a.u.sign() > 0);
                if (prev.sign() >= 0) CHECK(a.error <= prev);
                prev = a.error;
            }
        }
    }
}

TEST_CASE("pencil witnesses") {
    auto F = build_family(FamilyKind::Quartic1728);
    auto co = quartic_coeffs(1, 1, 1);
    auto P = family_pencil(F, co);
    auto w = pencil_density_witness(P, F, co, Rat(1), Rat::parse("1/10"));
    CHECK(w.u == Rat::parse("5/6"));
    CHECK(w.t_prime == Rat::parse("671/625"));
    CHECK(!w.certificate.torsion);
    CHECK(w.f_nonnegative);  // t^4 + t + 1 > 0
    CHECK(verify_density_witness(w, P.g(), P.f()) == "");

    auto S6 = build_family(FamilyKind::Sextic0);
    auto co6 = sextic_coeffs(1, 1, 1);
    auto P6 = family_pencil(S6, co6);
    // u = 1 lands on the 3-torsion point (0, 1) of y^2 = x^3 + 1.
    auto first = approximate_u_for_t(S6, co6, Rat(0), Rat::parse("1/2"));
    CHECK(first.u == Rat(1));
    auto w6 = pencil_density_witness(P6, S6, co6, Rat(0), Rat::parse("1/2"));
    CHECK(w6.u == Rat::parse("10/9"));
    CHECK(verify_density_witness(w6, P6.g(), P6.f()) == "");
    DensityCaps tight;
    tight.retries = 1;
    try {
        pencil_density_witness(P6, S6, co6, Rat(0), Rat::parse("1/2"), tight);
        FAIL("expected CapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CapExceeded);
    }

    auto co2 = quartic_coeffs(1, 1, -1);
    auto P2 = family_pencil(F, co2);
    auto w2 = pencil_density_witness(P2, F, co2, Rat(3), Rat::parse("1/10"));
    CHECK(!w2.f_nonnegative);
    CHECK(verify_density_witness(w2, P2.g(), P2.f()) == "");

    auto bad = w;
    bad.t_prime += Rat(1);
    CHECK(verify_density_witness(bad, P.g(), P.f()) != "");
}

TEST_CASE("kummer witnesses") {
    auto S = build_quotient_surface(2, 3, Rat(1), Rat(1), Rat(2), Rat(3));
    CHECK_THROWS_AS(kummer_density_witness(S, Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)), Error);
    try {
        kummer_density_witness(S, Rat(-1), Rat(1), Rat(-1), Rat(0), Rat(1));
    } catch (const Error& e) {
        CHECK(e.code() != Errc::Internal);
    }
    auto out = kummer_density_witness(S, Rat(-2), Rat(1), Rat(-2), Rat(0), Rat(1));
    REQUIRE(out.found);
    const auto& w = *out.witness;
    CHECK((w.t_prime).abs() < Rat(1));
    CHECK(verify_density_witness(w, S.g(), S.f()) == "");
    CHECK(!w.certificate.torsion);
    REQUIRE(w.chord_certificate);
    CHECK(!w.chord_certificate->torsion);
    MESSAGE("kummer witness: t'=" << w.t_prime << " x=" << w.x << " y=" << w.y << " m=" << w.multiple
                                  << " n=" << w.chord_index << " steps=" << out.steps);
    auto bad = w;
    bad.y += Rat(1);
    CHECK(verify_density_witness(bad, S.g(), S.f()) != "");
}

TEST_CASE("kummer witness on the oval when g has three real roots") {
    // g = x^3 - 4x, f = t^3 - 3t + 1; the seed (-1, 1, -1) has f(-1) = 3 = g(-1).
    auto S = build_quotient_surface(2, 3, Rat(-4), Rat(0), Rat(-3), Rat(1));
    for (const Rat& t1 : {Rat(0), Rat(1), Rat(2)}) {
        auto out = kummer_density_witness(S, Rat(-1), Rat(1), Rat(-1), t1, Rat::parse("1/2"));
        REQUIRE(out.found);
        const auto& w = *out.witness;
        CHECK(w.three_roots);
        CHECK(verify_density_witness(w, S.g(), S.f()) == "");
        CHECK(oval_contains(census_fiber_t(S.g(), S.f(), w.t_prime), w.x));
        CHECK((S.g().eval(w.x) / S.f().eval(w.t_prime)).sign() >= 0);
        CHECK(surface_contains(S, w.x, w.y, w.t_prime));
    }
}

TEST_CASE("chord walk stays on one K_y fiber") {
    auto S = build_quotient_surface(2, 3, Rat(1), Rat(1), Rat(2), Rat(3));
    const Rat y(1);
    auto C = fiber_y(S, y);
    auto seq = chord_sequence(C, fiber_y_point(Rat(-2), Rat(-2)), 6);
    auto back = chord_sequence(C, fiber_y_point(Rat(-2), Rat(-2)), -6);
    seq.insert(seq.end(), back.begin(), back.end());
    for (const auto& q : seq) {
        if (q.at_infinity()) continue;
        // (X : Y : 1) on K_y is the surface point (x, y, t) = (X, y, Y).
        CHECK(surface_contains(S, q.X(), y, q.Y()));
    }
}

TEST_CASE("walk caps end in an inconclusive outcome") {
    auto S = build_quotient_surface(2, 3, Rat(1), Rat(1), Rat(2), Rat(3));
    DensityCaps caps;
    caps.chord_steps = 6;
    auto out = kummer_density_witness(S, Rat(-2), Rat(1), Rat(-2), Rat(5), Rat::parse("1/1000000000"), caps);
    CHECK(!out.found);
    CHECK(!out.reason.empty());
    CHECK(out.steps <= 6);
    caps = {};
    caps.max_bits = 64;
    out = kummer_density_witness(S, Rat(-2), Rat(1), Rat(-2), Rat(5), Rat::parse("1/1000000000"), caps);
    CHECK(!out.found);
}
