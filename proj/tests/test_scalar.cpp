#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddbar/scalar.hpp"
#include "helpers.hpp"

using namespace ddbar;
using test::gr;
using test::grq;

TEST_CASE("rational parsing is canonical") {
    CHECK(rational_to_string(parse_rational("2/4")) == "1/2");
    CHECK(rational_to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(rational_to_string(parse_rational("5")) == "5");
    CHECK(rational_to_string(parse_rational("0/7")) == "0");
    CHECK(parse_rational("3/6") == parse_rational("1/2"));
}

TEST_CASE("rational parse rejects malformed input") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("/2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("arithmetic basics") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == gr(-1));
    CHECK((gr(1, 2) * gr(3, -1)) == gr(5, 5));
    CHECK((grq("1/2") + grq("1/3")) == grq("5/6"));
    CHECK(-gr(2, -3) == gr(-2, 3));
    CHECK(gr(0).is_zero());
    CHECK_THROWS_AS(gr(0).inverse(), Error);
}

TEST_CASE("field axioms on random values") {
    Rng rng(7);
    auto random_value = [&rng]() {
        long a = rng.below(9) - 4, b = rng.below(9) - 4;
        long d = 1 + rng.below(4);
        return GaussianRational(Rational(a, d), Rational(b, d));
    };
    for (int t = 0; t < 300; ++t) {
        GaussianRational x = random_value(), y = random_value(), z = random_value();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).conj() == x.conj() * y.conj());
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == gr(1));
            CHECK((y / x) * x == y);
        }
        CHECK(x.norm() == (x * x.conj()).re());
        CHECK((x * x.conj()).im() == 0);
    }
}

TEST_CASE("string rendering") {
    CHECK(gr(0).str() == "0");
    CHECK(gr(0, 1).str() == "i");
    CHECK(gr(0, -1).str() == "-i");
    CHECK(gr(1, -2).str() == "1-2i");
    CHECK(grq("3/2", "0").str() == "3/2");
}
