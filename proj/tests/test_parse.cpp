#include "doctest.h"

#include "kalg/parse.hpp"
#include "test_support.hpp"

using namespace kalg;

TEST_CASE("element grammar") {
    LieElement x = parse_element("K[2] - K[-2] + (0+1/2i)*C");
    CHECK(x.kind() == AlgebraKind::K);
    CHECK(x.coeff(2) == GaussianRational(1));
    CHECK(x.coeff(-2) == GaussianRational(-1));
    CHECK(x.central_coeff() == GaussianRational(Rational(0), Rational(1, 2)));

    LieElement l = parse_element("3*L[0]");
    CHECK(l.kind() == AlgebraKind::Vir);
    CHECK(l.coeff(0) == GaussianRational(3));

    CHECK(parse_element("0").is_zero());
    CHECK(parse_element("0", AlgebraKind::K0).kind() == AlgebraKind::K0);

    CHECK_THROWS_WITH_AS(parse_element("K[0]"),
                         "parse error at position 0: index 0 not in K basis",
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_element("K[2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("K[1] + L[2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("2 K[1]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("K[1] + C", AlgebraKind::K0), std::domain_error);
}

TEST_CASE("formatting") {
    LieElement x(AlgebraKind::K0);
    x.add_term(1, GaussianRational(3));
    x.add_term(2, GaussianRational(-2));
    CHECK(format_element(x) == "3*K[1] - 2*K[2]");
    CHECK(format_element(LieElement::zero(AlgebraKind::K)) == "0");

    // Positive indices come first, then negatives by magnitude, then C.
    CHECK(format_element(parse_element("(0+1/2i)*C + K[-2] - K[2] + K[1]")) ==
          "K[1] - K[2] + K[-2] + (0+1/2i)*C");
}

TEST_CASE("bracket example formats byte-for-byte") {
    LieElement b = bracket(parse_element("K[2]"), parse_element("K[-1]"));
    CHECK(format_element(b) == "3*K[1] - 2*K[2] - K[-1]");
}

TEST_CASE("parse-format round trip") {
    std::mt19937 rng(127);
    for (int t = 0; t < 200; ++t) {
        for (AlgebraKind kind :
             {AlgebraKind::K, AlgebraKind::K0, AlgebraKind::Vir, AlgebraKind::Witt}) {
            LieElement x = testing::random_element(rng, kind, 9);
            CHECK(parse_element(format_element(x), kind) == x);
        }
    }
}
