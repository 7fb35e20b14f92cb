#include <doctest.h>

#include <random>

#include "kf/census.hpp"
#include "kf/surface.hpp"

using namespace kf;

namespace {

UPoly P(std::initializer_list<long> lowest_first) {
    std::vector<Rat> c;
    for (long v : lowest_first) c.emplace_back(v);
    return UPoly(c);
}

QuotientSurface K(long a, long b, long c, long d) { return build_quotient_surface(2, 3, Rat(a), Rat(b), Rat(c), Rat(d)); }

}  // namespace

TEST_CASE("quotient surfaces") {
    auto S = K(1, 1, 2, 3);
    CHECK(S.g() == P({1, 1, 0, 1}));
    CHECK(S.f() == P({3, 2, 0, 1}));
    CHECK(S.kn_coprime);
    CHECK_THROWS_AS(K(0, 0, 2, 3), Error);
    CHECK_THROWS_AS(K(1, 1, 0, 0), Error);
    CHECK_THROWS_AS(build_quotient_surface(1, 3, Rat(1), Rat(1), Rat(1), Rat(1)), Error);
    auto X = build_quotient_surface(3, 4, Rat(1), Rat(1), Rat(2), Rat(3));
    CHECK(X.kn_coprime);
    CHECK_FALSE(build_quotient_surface(2, 4, Rat(1), Rat(1), Rat(2), Rat(3)).kn_coprime);
    CHECK(K(0, 1, 0, 2).excluded_case);
    CHECK(K(1, 0, 2, 0).excluded_case);
    CHECK_FALSE(S.excluded_case);
    // a^n d^(n-1) - b^(n-1) c^n = 1*9 - 1*8
    CHECK(S.irreducibility_term);
    CHECK_FALSE(K(1, 1, 1, 1).irreducibility_term);
}

TEST_CASE("surface membership") {
    CHECK(surface_contains(K(1, 1, 2, 3), Rat(-2), Rat(1), Rat(-2)));
    CHECK_FALSE(surface_contains(K(1, 1, 2, 3), Rat(-2), Rat(1), Rat(-1)));
    auto X = build_quotient_surface(3, 4, Rat(1), Rat(1), Rat(2), Rat(3));
    CHECK(surface_contains(X, Rat(-2), Rat(1), Rat(-2)));
    // y = 0: membership iff g(x) = 0.
    auto S = K(-4, 0, 0, 1);
    CHECK(surface_contains(S, Rat(2), Rat(0), Rat(5)));
    CHECK_FALSE(surface_contains(S, Rat(1), Rat(0), Rat(5)));
}

TEST_CASE("fiber_t") {
    auto F = fiber_t(K(1, 1, 2, 3), Rat(-2));
    CHECK(F.q() == Rat(-9));
    CHECK(F.curve() == WeierstrassCurve(Rat(81), Rat(-729)));
    CHECK(F.transport(Rat(-2), Rat(1)) == ECPoint(Rat(18), Rat(81)));

    auto pencil = build_twist_pencil(WeierstrassCurve(Rat(-4), Rat(0)), 4, Rat(0), Rat(1));
    CHECK(fiber_t(pencil, Rat(0)).curve() == WeierstrassCurve(Rat(-4), Rat(0)));
    CHECK_FALSE(pencil.hypotheses_hold());
    CHECK(build_twist_pencil(WeierstrassCurve(Rat(1), Rat(0)), 4, Rat(1), Rat(1)).hypotheses_hold());
    CHECK_THROWS_AS(build_twist_pencil(WeierstrassCurve(Rat(1), Rat(1)), 4, Rat(1), Rat(1)), Error);

    // f(t) = t^3 - t has root t = 1.
    CHECK_THROWS_AS(fiber_t(K(1, 1, -1, 0), Rat(1)), Error);
    CHECK_THROWS_AS(fiber_t(K(-3, 2, 2, 3), Rat(0)), Error);  // x^3 - 3x + 2 has a double root
}

TEST_CASE("fiber_t transports surface points") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    auto S = K(1, 1, 2, 3);
    for (int i = 0; i < 60; ++i) {
        Rat x(num(rng), den(rng)), t(num(rng), den(rng));
        Rat q = S.f().eval(t);
        if (q.is_zero()) continue;
        // Scale so that (x, 1) lies on the fiber at t: use the surface K(a, b', c, d') with
        // b' chosen to force membership.
        Rat b2 = q - x * x * x - S.a * x;
        auto T = build_quotient_surface(2, 3, S.a, b2, S.c, S.d);
        if ((Rat(4) * T.a.pow(3) + Rat(27) * T.b.pow(2)).is_zero()) continue;
        REQUIRE(surface_contains(T, x, Rat(1), t));
        auto F = fiber_t(T, t);
        ECPoint P = F.transport(x, Rat(1));
        CHECK(F.curve().contains(P.x(), P.y()));
    }
}

TEST_CASE("fiber_y") {
    auto C = fiber_y(K(1, 1, 2, 3), Rat(1));
    MPoly X = MPoly::var(Var::X), Y = MPoly::var(Var::Y), Z = MPoly::var(Var::Z);
    MPoly expect = X.pow(3) + X * Z.pow(2) + Z.pow(3) - (Y.pow(3) + Rat(2) * Y * Z.pow(2) + Rat(3) * Z.pow(3));
    CHECK(C.to_mpoly() == expect);
    CHECK(C.contains(fiber_y_point(Rat(-2), Rat(-2))));
    CHECK(cubic_is_smooth(C));
    CHECK_THROWS_AS(fiber_y(K(1, 1, 2, 3), Rat(0)), Error);
}

TEST_CASE("component census examples") {
    // g = x^3 + x + 1 has one real root: K_t fiber is connected.
    auto one = census_fiber_t(P({1, 1, 0, 1}), P({1, 0, 0, 0, 1}), Rat(0));
    CHECK(one.count == 1);
    CHECK_FALSE(one.oval);

    auto two = census_fiber_t(P({0, -4, 0, 1}), P({1, 0, 0, 0, 1}), Rat(0));
    REQUIRE(two.count == 2);
    REQUIRE(two.oval);
    const auto& oval = two.components[*two.oval];
    CHECK(oval.bounded);
    CHECK(oval.x_low.compare(Rat(-2)) == 0);
    CHECK(oval.x_high.compare(Rat(0)) == 0);
    CHECK(two.components[1].x_low.compare(Rat(2)) == 0);
    CHECK(two.components[1].x_high.kind == XBound::Kind::PosInf);

    // Negative f(t0): the region is g <= 0, components (-inf, -2] and [0, 2] with the oval on the right.
    auto neg = census_fiber_t(P({0, -4, 0, 1}), P({-1, 0, 0, 0, 1}), Rat(0));
    REQUIRE(neg.count == 2);
    REQUIRE(neg.oval);
    CHECK(neg.components[*neg.oval].x_low.compare(Rat(0)) == 0);
    CHECK(neg.components[*neg.oval].x_high.compare(Rat(2)) == 0);

    CHECK(census_fiber_y(K(1, 1, 2, 3), Rat(1)).count == 1);
    CHECK_THROWS_AS(real_component_census(P({0, 0, 0, 1}), Rat(1), P({0, 0, 1})), Error);  // x^3 = s^2, cusp
}

TEST_CASE("oval membership") {
    auto two = census_fiber_t(P({0, -4, 0, 1}), P({1, 0, 0, 0, 1}), Rat(0));
    CHECK(oval_contains(two, Rat(-1)));
    CHECK_FALSE(oval_contains(two, Rat(1)));
    CHECK(oval_contains(two, Rat(-2)));
    CHECK(oval_contains(two, Rat(0)));
    CHECK_FALSE(oval_contains(two, Rat::parse("-2001/1000")));
    CHECK_FALSE(oval_contains(two, Rat(3)));
    auto one = census_fiber_t(P({1, 1, 0, 1}), P({1, 0, 0, 0, 1}), Rat(0));
    CHECK_THROWS_AS(oval_contains(one, Rat(0)), Error);
}

TEST_CASE("oval endpoints are the two smallest roots when f > 0") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> r(-6, 6);
    for (int i = 0; i < 25; ++i) {
        long a = r(rng), b = r(rng), c = r(rng);
        if (a == b || b == c || a == c) continue;
        std::array<long, 3> roots{a, b, c};
        std::sort(roots.begin(), roots.end());
        UPoly g = P({-roots[0], 1}) * P({-roots[1], 1}) * P({-roots[2], 1});
        auto cen = census_fiber_t(g, P({2, 1, 0, 0, 1}), Rat(1));
        REQUIRE(cen.oval);
        CHECK(cen.components[*cen.oval].x_low.compare(Rat(roots[0])) == 0);
        CHECK(cen.components[*cen.oval].x_high.compare(Rat(roots[1])) == 0);
    }
}

TEST_CASE("assumption bounds check") {
    UPoly g = P({0, -4, 0, 1}), f = P({1, 0, 0, 0, 1});
    CHECK(assumption_bounds_check(g, f, Rat(0), Rat(1)));
    CHECK_FALSE(assumption_bounds_check(g, f, Rat(0), Rat(2)));
    CHECK(assumption_bounds_check(P({1, 1, 0, 1}), f, Rat(0), Rat(100)));
}

TEST_CASE("assumption bounds check equals three distinct roots of g - v") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
    UPoly f = P({1, 1, 0, 0, 1});
    for (int i = 0; i < 200; ++i) {
        UPoly g = P({0, -7, 0, 1}) + UPoly::constant(Rat(num(rng), den(rng)));
        if (SturmSequence(g).count_total() < 3) continue;
        Rat t1(num(rng), den(rng)), y0(num(rng), den(rng));
        Rat v = f.eval(t1) * y0 * y0;
        UPoly shifted = g - UPoly::constant(v);
        bool three = SturmSequence(shifted).count_total() == 3 && squarefree_part(shifted).degree() == 3;
        CHECK(assumption_bounds_check(g, f, t1, y0) == three);
    }
}

TEST_CASE("census agrees with a coarse sign grid") {
    struct Case { UPoly g; Rat w; UPoly h; };
    std::vector<Case> cases = {
        {P({1, 1, 0, 1}), Rat(1), P({0, 0, 1})},
        {P({0, -4, 0, 1}), Rat(1), P({0, 0, 1})},
        {P({0, -4, 0, 1}), Rat(-1), P({0, 0, 1})},
        {P({1, 1, 0, 1}), Rat(1), P({3, 2, 0, 1})},
        {P({0, -4, 0, 1}), Rat(1), P({0, -1, 0, 1})},
    };
    for (const auto& c : cases) {
        auto cen = real_component_census(c.g, c.w, c.h);
        Rat R = census_box_radius(c.g, c.w, c.h);
        CHECK(sign_grid_components(c.g, c.w, c.h, R.num().get_si(), 16) == cen.count);
    }
}
