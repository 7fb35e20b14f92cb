#include <doctest.h>

#include <random>

#include "catalog.hpp"
#include "kf/elliptic.hpp"

using namespace kf;
using kf::testing::oracle_order;

namespace {

ECPoint pt(long x, long y) { return ECPoint(Rat(x), Rat(y)); }

// Curve through two random rational points, returning both.
struct TwoPoints {
    WeierstrassCurve E;
    ECPoint P1, P2;
};

std::optional<TwoPoints> random_curve(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    Rat x1(num(rng), den(rng)), y1(num(rng), den(rng)), x2(num(rng), den(rng)), y2(num(rng), den(rng));
    if (x1 == x2) return std::nullopt;
    // y_i^2 - x_i^3 = A x_i + B
    Rat r1 = y1 * y1 - x1 * x1 * x1, r2 = y2 * y2 - x2 * x2 * x2;
    Rat A = (r1 - r2) / (x1 - x2);
    Rat B = r1 - A * x1;
    if ((Rat(4) * A * A * A + Rat(27) * B * B).is_zero()) return std::nullopt;
    return TwoPoints{WeierstrassCurve(A, B), ECPoint(x1, y1), ECPoint(x2, y2)};
}

}  // namespace

TEST_CASE("group law examples") {
    WeierstrassCurve E(Rat(0), Rat(1));
    CHECK(ec_add(E, pt(2, 3), ECPoint::infinity()) == pt(2, 3));
    CHECK(ec_add(E, pt(2, 3), pt(2, 3)) == pt(0, 1));
    CHECK(ec_add(E, pt(0, 1), pt(2, 3)) == pt(-1, 0));
    CHECK(ec_mul(E, 0, pt(2, 3)).is_infinity());
    CHECK(ec_mul(E, 6, pt(2, 3)).is_infinity());
    CHECK(ec_mul(E, -5, pt(2, 3)) == ec_mul(E, 5, pt(2, 3)).negated());
    CHECK(ec_add(E, pt(-1, 0), pt(-1, 0)).is_infinity());

    WeierstrassCurve E2(Rat(0), Rat(-2));
    CHECK(ec_mul(E2, 2, pt(3, 5)) == ECPoint(Rat::parse("129/100"), Rat::parse("-383/1000")));
    CHECK_THROWS_AS(ec_add(E2, pt(2, 3), pt(3, 5)), Error);
    CHECK_THROWS_AS(WeierstrassCurve(Rat(0), Rat(0)), Error);
    CHECK_THROWS_AS(WeierstrassCurve(Rat(-3), Rat(2)), Error);
}

TEST_CASE("integral models") {
    auto m = to_integral_model(WeierstrassCurve(Rat::parse("1/4"), Rat(0)), ECPoint::infinity());
    CHECK(m.scale == Rat(2));
    CHECK(m.curve.A == Rat(4));
    CHECK(m.curve.B == Rat(0));

    m = to_integral_model(WeierstrassCurve(Rat(0), Rat::parse("1/27")), ECPoint::infinity());
    CHECK(m.scale == Rat(3));
    CHECK(m.curve.B == Rat(27));

    m = to_integral_model(WeierstrassCurve(Rat(0), Rat(1)), pt(2, 3));
    CHECK(m.scale == Rat(1));
    CHECK(m.point == pt(2, 3));
    CHECK(m.minimal);

    // Mixed denominators: A = 1/8 needs lambda^4 divisible by 8, B = 1/9 needs lambda^6 by 9.
    m = to_integral_model(WeierstrassCurve(Rat::parse("1/8"), Rat::parse("1/9")), ECPoint::infinity());
    CHECK(m.scale == Rat(6));
    CHECK(m.curve.A.is_integer());
    CHECK(m.curve.B.is_integer());
}

TEST_CASE("quadratic twists") {
    WeierstrassCurve E(Rat(1), Rat(1));
    CHECK(quadratic_twist(E, Rat(1)).curve == E);
    Twist T = quadratic_twist(E, Rat(-9));
    CHECK(T.curve == WeierstrassCurve(Rat(81), Rat(-729)));
    ECPoint P = T.forward(Rat(-2), Rat(1));
    CHECK(P == pt(18, 81));
    CHECK(T.curve.contains(P.x(), P.y()));
    CHECK(T.backward(P) == std::make_pair(Rat(-2), Rat(1)));
    CHECK_THROWS_AS(quadratic_twist(E, Rat(0)), Error);
}

TEST_CASE("torsion test examples") {
    auto v = torsion_test(WeierstrassCurve(Rat(0), Rat(1)), pt(2, 3));
    CHECK(v.torsion);
    CHECK(v.order == 6);

    v = torsion_test(WeierstrassCurve(Rat(0), Rat(-2)), pt(3, 5));
    CHECK_FALSE(v.torsion);
    CHECK(v.method == NonTorsionMethod::LutzNagellNonIntegral);

    v = torsion_test(WeierstrassCurve(Rat(-4), Rat(0)), pt(0, 0));
    CHECK(v.torsion);
    CHECK(v.order == 2);

    CHECK_THROWS_AS(torsion_test(WeierstrassCurve(Rat(0), Rat(1)), ECPoint::infinity()), Error);
}

TEST_CASE("group associativity on random points") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> k(-2, 2);
    int done = 0;
    while (done < 220) {
        auto c = random_curve(rng);
        if (!c) continue;
        auto comb = [&]() {
            return ec_add(c->E, ec_mul(c->E, k(rng), c->P1), ec_mul(c->E, k(rng), c->P2));
        };
        ECPoint P = comb(), Q = comb(), R = comb();
        CHECK(ec_add(c->E, ec_add(c->E, P, Q), R) == ec_add(c->E, P, ec_add(c->E, Q, R)));
        CHECK(ec_add(c->E, P, Q) == ec_add(c->E, Q, P));
        CHECK(ec_add(c->E, P, P.negated()).is_infinity());
        ++done;
    }
}

TEST_CASE("random points from twists of catalog curves") {
    // x chosen at random; q = g(x) makes (x, 1) a solution of q y^2 = g(x).
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 5);
    const WeierstrassCurve cat[] = {{Rat(1), Rat(1)}, {Rat(-4), Rat(0)}, {Rat(0), Rat(-2)}, {Rat(-43), Rat(166)}};
    int done = 0;
    while (done < 60) {
        const auto& E = cat[done % 4];
        Rat x(num(rng), den(rng));
        Rat q = x * x * x + E.A * x + E.B;
        if (q.is_zero()) continue;
        Twist T = quadratic_twist(E, q);
        ECPoint P = T.forward(x, Rat(1));
        REQUIRE(T.curve.contains(P.x(), P.y()));
        ECPoint Q = ec_mul(T.curve, 2, P), R = ec_mul(T.curve, -3, P);
        CHECK(ec_add(T.curve, ec_add(T.curve, P, Q), R) == ec_add(T.curve, P, ec_add(T.curve, Q, R)));
        ++done;
    }
}

TEST_CASE("twist functoriality") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
    WeierstrassCurve E(Rat(2), Rat(-3));
    int done = 0;
    while (done < 50) {
        Rat x(num(rng), den(rng)), q(num(rng), den(rng));
        Rat g = x * x * x + E.A * x + E.B;
        if (q.is_zero() || g.is_zero()) continue;
        // (x, 1) solves qq' y^2 = g(x) with q' = g / q.
        Rat q2 = g / q;
        Twist direct = quadratic_twist(E, q * q2);
        Twist first = quadratic_twist(E, q);
        Twist second = quadratic_twist(first.curve, q2);
        CHECK(second.curve == direct.curve);
        ECPoint via_direct = direct.forward(x, Rat(1));
        ECPoint mid = first.forward(x, Rat(1));  // solves q2 Y^2 = g_q(X)
        CHECK(q2 * mid.y() * mid.y() == mid.x() * mid.x() * mid.x() + first.curve.A * mid.x() + first.curve.B);
        CHECK(second.forward(mid.x(), mid.y()) == via_direct);
        CHECK(direct.backward(via_direct) == std::make_pair(x, Rat(1)));
        // Twisting by q s^2 lands on a curve isomorphic over Q via (X, Y) -> (s^2 X, s^3 Y).
        Rat s(num(rng) | 1, den(rng));
        Twist scaled = quadratic_twist(E, q * s * s);
        CHECK(scaled.curve.A == first.curve.A * s.pow(4));
        CHECK(scaled.curve.B == first.curve.B * s.pow(6));
        ++done;
    }
}

TEST_CASE("torsion test agrees with brute force on the catalog") {
    auto cat = kf::testing::torsion_catalog();
    CHECK(cat.size() >= 30);
    for (const auto& e : cat) {
        REQUIRE(e.curve.contains(e.point.x(), e.point.y()));
        auto v = torsion_test(e.curve, e.point);
        int oracle = oracle_order(e.curve, e.point);
        CHECK(v.torsion == (oracle != 0));
        if (v.torsion) {
            CHECK(v.order == oracle);
            CHECK(ec_mul(e.curve, v.order, e.point).is_infinity());
            for (int m = 1; m < v.order; ++m) CHECK_FALSE(ec_mul(e.curve, m, e.point).is_infinity());
        }
        if (e.expected_order) CHECK(oracle == e.expected_order);
    }
}

TEST_CASE("torsion test agrees with brute force on random points") {
    std::mt19937_64 rng(77);
    int done = 0;
    while (done < 100) {
        auto c = random_curve(rng);
        if (!c) continue;
        auto v = torsion_test(c->E, c->P1);
        int oracle = oracle_order(c->E, c->P1);
        CHECK(v.torsion == (oracle != 0));
        if (v.torsion) CHECK(v.order == oracle);
        ++done;
    }
}
