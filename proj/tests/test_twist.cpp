#include <doctest.h>

#include <random>
#include <set>

#include "kf/twist.hpp"

using namespace kf;

namespace {

QuotientSurface K1123() { return build_quotient_surface(2, 3, Rat(1), Rat(1), Rat(2), Rat(3)); }

using FL = std::vector<std::pair<Int, unsigned>>;

}  // namespace

TEST_CASE("kth power free classes") {
    auto c = kth_power_free_class(Rat(18), 2);
    CHECK(c.sign == 1);
    CHECK(c.factors == FL{{2, 1}});
    c = kth_power_free_class(Rat::parse("4/9"), 2);
    CHECK(c.sign == 1);
    CHECK(c.factors.empty());
    c = kth_power_free_class(Rat(-8), 3);
    CHECK(c.sign == 1);
    CHECK(c.factors.empty());
    c = kth_power_free_class(Rat(-9), 2);
    CHECK(c.sign == -1);
    CHECK(c.factors.empty());
    // 1/2 = 2 * (1/2)^2 mod squares; 1/2 = 4 * (1/2)^3 mod cubes.
    CHECK(kth_power_free_class(Rat::parse("1/2"), 2).factors == FL{{2, 1}});
    CHECK(kth_power_free_class(Rat::parse("1/2"), 3).factors == FL{{2, 2}});
    CHECK(kth_power_free_class(Rat(15), 3).factors == FL{{3, 1}, {5, 1}});
    CHECK(kth_power_free_class(Rat(-12), 3).representative() == Int(12));
    CHECK_THROWS_AS(kth_power_free_class(Rat(0), 2), Error);
}

TEST_CASE("classes are invariant under k-th powers") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> num(-400, 400), den(1, 300);
    for (int i = 0; i < 200; ++i) {
        int k = 2 + static_cast<int>(rng() % 4);
        Rat q(num(rng), den(rng)), s(num(rng), den(rng));
        if (q.is_zero() || s.is_zero()) continue;
        CHECK(kth_power_free_class(q * s.pow(k), k) == kth_power_free_class(q, k));
    }
}

TEST_CASE("class of u") {
    auto S = K1123();
    auto F = build_family(FamilyKind::GeneralKN, 2, 3);
    auto c = twist_class_of_u(S, F, Rat(1));
    CHECK(c.representative == Rat(-9));
    CHECK(c.cls.sign == -1);
    CHECK(c.cls.factors.empty());

    auto X = build_quotient_surface(3, 4, Rat(1), Rat(1), Rat(2), Rat(3));
    auto c3 = twist_class_of_u(X, build_family(FamilyKind::GeneralKN, 3, 4), Rat(1));
    CHECK(c3.representative == Rat(15));
    CHECK(c3.cls.factors == FL{{3, 1}, {5, 1}});
    CHECK_THROWS_AS(twist_class_of_u(X, F, Rat(1)), Error);
}

TEST_CASE("class map consistency on random u") {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<long> num(-15, 15), den(1, 15);
    auto S = K1123();
    auto F = build_family(FamilyKind::GeneralKN, 2, 3);
    for (int i = 0; i < 60; ++i) {
        Rat u(num(rng), den(rng));
        if (u.is_zero()) continue;
        try {
            auto c = twist_class_of_u(S, F, u);  // throws Internal on mismatch
            CHECK(c.cls.k == 2);
        } catch (const Error& e) {
            CHECK(e.code() != Errc::Internal);
        }
    }
}

TEST_CASE("height enumeration order") {
    auto us = enumerate_by_height(2);
    std::vector<Rat> expect = {Rat(1), Rat(-1), Rat::parse("1/2"), Rat::parse("-1/2"), Rat(2), Rat(-2)};
    CHECK(us == expect);
    CHECK(enumerate_by_height(0).empty());
}

TEST_CASE("simultaneous twists") {
    auto S = K1123();
    auto F = build_family(FamilyKind::GeneralKN, 2, 3);
    CHECK(simultaneous_twists(S, F, 0, 10).witnesses.empty());
    auto one = simultaneous_twists(S, F, 1, 10);
    REQUIRE(one.witnesses.size() == 1);
    const auto& w = one.witnesses[0];
    CHECK(w.u == Rat(1));
    CHECK(w.l == Rat(-9));
    CHECK(w.x == Rat(-2));
    CHECK(w.y1 == Rat(1));
    CHECK(w.t == Rat(-2));
    CHECK(w.y2 == Rat(1));

    auto many = simultaneous_twists(S, F, 25, 40);
    CHECK_FALSE(many.shortfall);
    REQUIRE(many.witnesses.size() == 25);
    std::set<std::string> classes;
    for (const auto& x : many.witnesses) {
        CHECK(verify_twist_witness(S, x));
        classes.insert(x.cls.str());
    }
    CHECK(classes.size() == 25);

    auto none = simultaneous_twists(S, F, 1000, 3);
    CHECK(none.shortfall);
    CHECK_THROWS_AS(simultaneous_twists(build_quotient_surface(2, 3, Rat(0), Rat(1), Rat(0), Rat(2)), F, 1, 5), Error);
}

TEST_CASE("more height never finds fewer classes") {
    auto S = K1123();
    auto F = build_family(FamilyKind::GeneralKN, 2, 3);
    std::size_t last = 0;
    for (long H = 1; H <= 8; ++H) {
        auto r = simultaneous_twists(S, F, 1000, H);
        CHECK(r.witnesses.size() >= last);
        last = r.witnesses.size();
    }
}
