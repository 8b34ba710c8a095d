#include "ovalis/orientation.hpp"

#include "doctest.h"

#include "test_support.hpp"

using namespace ovalis;
using ovalis::testing::engine;
using ovalis::testing::scheme;
using ovalis::testing::type;

TEST_CASE("pi difference") {
    CHECK(pi_difference(scheme("+", "+", "(+,+)")) == -1);
    CHECK(pi_difference(scheme("+", "(+,-)", "(+,-,-)")) == 3);
    CHECK(pi_difference(scheme("(+,-)", "(+,-)", "(+,-,-)")) == 4);
}

TEST_CASE("capital lambda") {
    CHECK(capital_lambda(scheme("+", "+", "(+,+)")) == -5);
    CHECK(capital_lambda(scheme("(pm,mp)", "(pm,mp)", "(pm,mp)")) == -1);
    CHECK(capital_lambda(scheme("-", "(-,-)", "(-,-)")) == -6);
}

TEST_CASE("e parameters") {
    const auto& c = engine().coeffs;
    CHECK(e_params(scheme("+", "+", "(+,+)"), c) == std::array<int, 4>{-4, -3, -3, -2});
    CHECK(e_params(scheme("+", "(+,-)", "(+,-,-)"), c) == std::array<int, 4>{0, 1, 0, -1});
    CHECK(e_params(scheme("(pm,mp)", "(pm,mp)", "(pm,mp)"), c) == std::array<int, 4>{0, 0, 0, 0});
    CHECK_THROWS_AS(e_params(scheme("+", "(+,-)", "(+,+,+)"), c), CoefficientError);
}

TEST_CASE("zone sets") {
    const auto& c = engine().coeffs;
    CHECK(zone_set(scheme("+", "-", "(+,-)"), c) == Zones::of({1}));
    CHECK(zone_set(scheme("-", "-", "(+,-)"), c) == Zones::of({0, 3}));
    CHECK(zone_set(scheme("+", "(+,-)", "(+,-,-)"), c) == Zones::of({0, 2}));
    // the forced sweep mode cuts the zone set down
    CHECK(zone_set(scheme("-", "(+,-)", "(+,-,-)"), c) == Zones::of({1}));
    CHECK(zone_set(scheme("+", "(+,-)", "(-,+,+)"), c) == Zones::of({3}));
    CHECK(zone_set(scheme("-", "(+,-)", "(-,+,+)"), c) == Zones::none());
    // the relaxed budget forces nothing
    CHECK(zone_set(scheme("(+,-)", "(+,-)", "(-,+,+)"), c) == Zones::of({0, 1, 2}));
}

TEST_CASE("separating deficits") {
    const auto& c = engine().coeffs;
    ComplexType a = type("(+,u)", "+", "(+,+)");
    CHECK(fg_deficit(a, 0, c) == -4);
    ComplexType b = type("-", "-", "(pm,mp,s)");
    CHECK(fg_deficit(b, 2, c) == 0);
    ComplexType d = type("(pm,mp,s)", "(pm,mp)", "(+,-,-)");
    CHECK(fg_deficit(d, 0, c) == 1);
    ComplexType e = type("-", "-", "(-,-,s)");
    CHECK(fg_deficit(e, 2, c) == -1);
    CHECK_THROWS_AS(fg_deficit(b, 0, c), PreconditionError);  // non-separating slot
    ComplexType f = type("(+,u)", "(pm,mp)", "(-,+,+)");
    CHECK_THROWS_AS(fg_deficit(f, 0, c), CoefficientError);  // undetermined G
}

TEST_CASE("lambda identities") {
    auto r = lambda_identities(Affine{-1}, Affine{0}, Affine{0}, Affine{2});
    CHECK(r == std::array<Affine, 3>{Affine{1}, Affine{1}, Affine{3}});
    r = lambda_identities(Affine::l0(), Affine{0}, Affine{1, 1}, Affine{0});
    CHECK(r[0] == Affine{0, -1});
    CHECK(r[1] == Affine{1});
    CHECK(r[2] == Affine{0, -1});
    r = lambda_identities(Affine{0}, Affine{0}, Affine{0}, Affine{0});
    CHECK(r == std::array<Affine, 3>{Affine{0}, Affine{0}, Affine{0}});
}

TEST_CASE("mu and epsilon3") {
    LambdaProfile p;
    p.l = {Affine::l0(), Affine{0, -1}, Affine{1}, Affine{0, -1},
           Affine{0},    Affine{1, 1},  Affine{0}};
    CHECK(mu(p) == Affine{1});
    CHECK(epsilon3(scheme("+", "(+,-)", "(+,-,-)")) == 1);
    CHECK(epsilon3(scheme("+", "(+,-)", "(-,+,+)")) == -1);
    CHECK_THROWS_AS(epsilon3(scheme("+", "+", "(+,-)")), PreconditionError);

    LambdaProfile zero;
    CHECK(mu(zero) == Affine{0});
}

TEST_CASE("chain placement fit") {
    const auto& pl = engine().placement;
    CHECK(pl.delta_t(kEvenPlus, Attr::Up) == 1);
    CHECK(pl.delta_0(kEvenPlus, Attr::Up) == 0);
    CHECK(pl.delta_t(kEvenPlus, Attr::Down) == 0);
    CHECK(pl.delta_0(kEvenPlus, Attr::Down) == 1);
    CHECK(pl.delta_0(kEvenMinus, Attr::Up) == -1);
    CHECK(pl.delta_t(kEvenMinus, Attr::Down) == -1);
    CHECK(pl.delta_t(kEvenMinus, Attr::NonSep) == 0);
    CHECK(pl.occupancy(kOddJoint, Attr::Sep) == Occupancy::Movable);
    CHECK(pl.occupancy(kEvenPlus, Attr::NonSep) == Occupancy::None);
    CHECK(pl.occupancy(kJumpPMM, Attr::Crossing) == Occupancy::None);
}

TEST_CASE("E parameters are symmetric in the codes") {
    const auto& c = engine().coeffs;
    auto s = scheme("+", "-", "(-,-)");
    auto swapped = scheme("-", "+", "(-,-)");
    auto e1 = e_params(s, c);
    auto e2 = e_params(swapped, c);
    CHECK(e1[0] == e2[0]);
    CHECK(e1[1] == e2[2]);
    CHECK(e1[2] == e2[1]);
    CHECK(e1[3] == e2[3]);
}
