#include "ovalis/affine.hpp"
#include "ovalis/codes.hpp"
#include "ovalis/scheme.hpp"

#include "doctest.h"

#include "test_support.hpp"

#include <set>

using namespace ovalis;
using ovalis::testing::scheme;

TEST_CASE("parity of nest codes") {
    CHECK(parity(kEvenPlus) == Parity::Even);
    CHECK(parity(kJumpPMM) == Parity::Even);  // odd jump, even interior count
    CHECK(parity(kOddMP) == Parity::Odd);
    CHECK(parity(kOddJoint) == Parity::Odd);
    for (NestCode c : {kOddPP, kOddPM, kOddMP, kOddMM})
        CHECK(parity(c) == Parity::Odd);
}

TEST_CASE("parity is stable under sign flip") {
    auto flipped = [](NestCode c) {
        NestCode f = c;
        f.sign = c.sign == Sign::Plus ? Sign::Minus : Sign::Plus;
        f.delta = static_cast<std::int8_t>(-c.delta);
        return f;
    };
    for (NestCode c : {kEvenPlus, kOddPP, kOddPM, kJumpPMM, kJumpPPP})
        CHECK(parity(c) == parity(flipped(c)));
}

TEST_CASE("token round trip") {
    for (const char* tok : {"+", "-", "(+,+)", "(+,-)", "(-,+)", "(-,-)", "(pm,mp)", "(+,-,-)",
                            "(-,+,+)", "(+,u)", "(-,d)", "(pm,mp,s)", "(+,-,n)", "(-,-,s)"}) {
        CHECK(to_token(parse_nest_token(tok)) == tok);
    }
    CHECK_THROWS_AS(parse_nest_token("(+,?)"), ParseError);
    CHECK_THROWS_AS(parse_nest_token("(+,-,+)"), ParseError);  // jump chains share a sign
    CHECK_THROWS_AS(parse_nest_token("(+,s)"), ParseError);    // even nest cannot be separating
    CHECK_THROWS_AS(parse_nest_token("(+,-,u)"), ParseError);  // odd nest cannot be up
}

TEST_CASE("jump flag is carried by the delta") {
    CHECK(kJumpPMM.jump());
    CHECK(kJumpPMM.sign_delta() == -2);
    CHECK(kJumpMPP.sign_delta() == -2);
    CHECK(kJumpPPP.sign_delta() == 2);
    CHECK(kOddJoint.sign_delta() == -1);
    CHECK_FALSE(kOddPM.jump());
}

TEST_CASE("affine cells") {
    CHECK(parse_affine("L0+3") == Affine{3, 1});
    CHECK(parse_affine("L0") == Affine{0, 1});
    CHECK(parse_affine("-L0") == Affine{0, -1});
    CHECK(parse_affine("1-L0") == Affine{1, -1});
    CHECK(parse_affine("-7") == Affine{-7});
    CHECK(parse_affine("2L0-1") == Affine{-1, 2});
    CHECK(Affine{3, 1}.str() == "L0+3");
    CHECK(Affine{1, -1}.str() == "1-L0");
    CHECK(Affine{0, -1}.str() == "-L0");
    CHECK(Affine{-4}.str() == "-4");
    CHECK(Affine{3, 1}.at(-2) == 1);
    CHECK_THROWS_AS(parse_affine("x"), ParseError);
    Affine symbolic{0, 1};
    CHECK_THROWS_AS(symbolic.as_int(), std::logic_error);
}

TEST_CASE("canonicalize sorts equal-parity nests") {
    auto a = canonicalize(scheme("(+,-)", "(-,+)", "(-,-)"));
    auto b = canonicalize(scheme("(-,+)", "(+,-)", "(-,-)"));
    CHECK(a == b);

    auto c = canonicalize(scheme("-", "+", "(+,+)"));
    CHECK(to_token(c.codes[0]) == "+");
    CHECK(to_token(c.codes[1]) == "-");
    CHECK(to_token(c.codes[2]) == "(+,+)");

    CHECK(canonicalize(a) == a);  // idempotent
}

TEST_CASE("joint collapse and expansion") {
    auto j = to_joint(scheme("(+,-)", "(-,+)", "(-,-)"));
    CHECK(to_token(j.codes[0]) == "(pm,mp)");
    CHECK(to_token(j.codes[1]) == "(pm,mp)");

    auto expanded = expand_joint(ComplexScheme{{kOddJoint, kOddJoint, kOddMM}});
    CHECK(expanded.size() == 3);  // one row with two joint nests covers three schemes

    std::set<ComplexScheme> joint;
    for (const auto& s : enumerate_schemes(ParityClass::OOO, false)) joint.insert(to_joint(s));
    CHECK(joint.size() == 10);
}

TEST_CASE("scheme validity") {
    CHECK(scheme("+", "-", "(+,-)").valid());
    CHECK_FALSE(ComplexScheme{{kEvenPlus, kEvenPlus, kEvenMinus}}.valid());  // needs an odd nest
    CHECK_FALSE(ComplexScheme{{kJumpPMM, kJumpPMM, kOddPM}}.valid());        // single jump nest
    CHECK(scheme("+", "(+,-)", "(+,-,-)").parity_class() == ParityClass::EEO);
    CHECK(scheme("(+,-)", "(+,-)", "(+,-,-)").parity_class() == ParityClass::EOO);
}

TEST_CASE("real scheme counts") {
    RealSchemeParams p{{4, 2, 5}, 14};
    CHECK(p.valid());
    CHECK(p.parity_class() == ParityClass::EEO);
    CHECK_FALSE(RealSchemeParams{{4, 2, 5}, 13}.valid());  // counts must reach 25
    CHECK_FALSE(RealSchemeParams{{0, 10, 5}, 10}.valid()); // nests are non-empty

    CHECK(compatible(p, scheme("+", "-", "(+,-)")));
    CHECK_FALSE(compatible(p, scheme("+", "(+,-)", "(-,-)")));  // parity mismatch
    // an odd-jump nest has an even interior count
    CHECK(compatible(RealSchemeParams{{4, 3, 6}, 12}, scheme("+", "(+,-)", "(+,-,-)")));
}
