#include <catch2/catch_amalgamated.hpp>

#include "arrtop/rational.hpp"

using arrtop::ParseError;
using arrtop::Rational;

TEST_CASE("parse_rational reads integers and fractions") {
    CHECK(arrtop::parse_rational("3/4", "x") == Rational(3, 4));
    CHECK(arrtop::parse_rational("-7", "x") == Rational(-7));
    CHECK(arrtop::parse_rational("0", "x") == Rational(0));
    CHECK(arrtop::parse_rational("2/4", "x") == Rational(1, 2));
    CHECK(arrtop::parse_rational("-6/-4", "x") == Rational(3, 2));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK_THROWS_AS(arrtop::parse_rational("1/0", "coef"), ParseError);
    CHECK_THROWS_AS(arrtop::parse_rational("", "coef"), ParseError);
    CHECK_THROWS_AS(arrtop::parse_rational("a/2", "coef"), ParseError);
    CHECK_THROWS_AS(arrtop::parse_rational("1/2/3", "coef"), ParseError);
    CHECK_THROWS_AS(arrtop::parse_rational("1.5", "coef"), ParseError);

    try {
        arrtop::parse_rational("1/0", "subspaces[0].equations[0][0]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("subspaces[0].equations[0][0]") != std::string::npos);
    }
}

TEST_CASE("to_string round-trips through parse") {
    for (const char* s : {"3/4", "-7", "0", "12/5"}) {
        const Rational r = arrtop::parse_rational(s, "x");
        CHECK(arrtop::parse_rational(arrtop::to_string(r), "x") == r);
    }
}
