#include "probstirling/rational.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <sstream>

using namespace probstirling;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    const Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);

    const Rational b(3, -6);
    CHECK(b.num() == -1);
    CHECK(b.den() == 2);

    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == 1);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("powers follow the 0^0 = 1 convention") {
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(3) == Rational(-8));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("parse and str round-trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-8).str() == "-8");
    CHECK(Rational(4, 6).str() == "2/3");

    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 /2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);

    auto gen = testing::make_gen();
    for (int i = 0; i < 200; ++i) {
        const Rational r = testing::random_rational(gen, 1000, 999);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("stream output matches str") {
    std::ostringstream os;
    os << Rational(-7, 2);
    CHECK(os.str() == "-7/2");
}
