#include <catch2/catch_amalgamated.hpp>

#include "geomjoin/errors.hpp"
#include "geomjoin/rational.hpp"

using namespace geomjoin;

TEST_CASE("parse and format round-trip") {
    CHECK(parseRat("3/4") == Rat(3, 4));
    CHECK(parseRat("-3/4") == Rat(-3, 4));
    CHECK(parseRat("7") == Rat(7));
    CHECK(parseRat("0/5") == Rat(0));
    CHECK(formatRat(Rat(3, 4)) == "3/4");
    CHECK(formatRat(Rat(7)) == "7/1");
    CHECK(formatRat(Rat(-1, 2)) == "-1/2");
    CHECK(parseRat(formatRat(Rat(22, 7))) == Rat(22, 7));
}

TEST_CASE("canonical lowest terms with positive denominator") {
    CHECK(Rat(BigInt(2), BigInt(4)) == Rat(1, 2));
    CHECK(formatRat(Rat(BigInt(2), BigInt(-4))) == "-1/2");
    CHECK(denominator(Rat(BigInt(5), BigInt(-3))) > 0);
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parseRat(""), InputError);
    CHECK_THROWS_AS(parseRat("1/0"), InputError);
    CHECK_THROWS_AS(parseRat("a/b"), InputError);
    CHECK_THROWS_AS(parseRat("1.5"), InputError);
    CHECK_THROWS_AS(parseRat("1/ 2"), InputError);
}

TEST_CASE("exactness under arithmetic") {
    Rat x(1, 3);
    Rat sum = 0;
    for (int i = 0; i < 3000; ++i) sum += x;
    CHECK(sum == Rat(1000));
}
