#include <doctest.h>

#include <random>

#include "ebound/error.hpp"
#include "ebound/rational.hpp"
#include "oracles.hpp"

using ebound::Integer;
using ebound::Rational;

TEST_CASE("rationals are kept in lowest terms with a positive denominator")
{
    const Rational r(Integer(6), Integer(-8));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 4);
    CHECK(r.str() == "-3/4");

    const Rational sum = Rational(1, 6) + Rational(1, 3);
    CHECK(sum.numerator() == 1);
    CHECK(sum.denominator() == 2);

    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), ebound::DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ebound::DomainError);
}

TEST_CASE("text format")
{
    CHECK(Rational::parse("-7/16") == Rational(-7, 16));
    CHECK(Rational::parse("1") == Rational(1));
    CHECK(Rational::parse("4/8").str() == "1/2");
    CHECK(Rational::parse("-0").str() == "0");
    CHECK(Rational::parse("\xE2\x88\x92" "7/16") == Rational(-7, 16));
    CHECK(Rational(238043, 580608).str() == "238043/580608");

    for (const char *bad : {"", "-", "/3", "3/", "1/0", "+1", " 1", "1 ", "1/-2", "1.5", "e", "--1", "1/2/3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), ebound::ParseError);
    }
}

TEST_CASE("parse(str(r)) == r on random rationals")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        const Rational r = oracle::random_rational(rng, 1000000, 1000000) * oracle::random_rational(rng);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("field laws hold exactly on random triples")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const Rational a = oracle::random_rational(rng, 50, 50);
        const Rational b = oracle::random_rational(rng, 50, 50);
        const Rational c = oracle::random_rational(rng, 50, 50);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        const Rational q = a * b;
        CHECK(gcd(q.numerator(), q.denominator()) == 1);
        CHECK(q.denominator() > 0);
    }
}

TEST_CASE("integer powers")
{
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), ebound::DomainError);
}
