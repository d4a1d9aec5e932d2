#include <doctest.h>

#include <random>

#include "ebound/error.hpp"
#include "ebound/interval.hpp"
#include "oracles.hpp"

using ebound::FloatInterval;
using ebound::Rational;

TEST_CASE("rational conversion rounds outward")
{
    const FloatInterval third = FloatInterval::from_rational(Rational(1, 3), 53);
    CHECK(third.strictly_contains(Rational(1, 3)));
    CHECK(third.width() > Rational(0));

    const FloatInterval half = FloatInterval::from_rational(Rational(1, 2), 53);
    CHECK(half.width() == Rational(0));
    CHECK(half.contains(Rational(1, 2)));
}

TEST_CASE("elementary operations contain the exact rational result")
{
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 400; ++i) {
        const Rational a = oracle::random_rational(rng, 1000, 997);
        Rational b = oracle::random_rational(rng, 1000, 991);
        if (b.is_zero()) {
            b = Rational(1, 7);
        }
        const mpfr_prec_t prec = 24 + (i % 5) * 40;
        const FloatInterval ia = FloatInterval::from_rational(a, prec);
        const FloatInterval ib = FloatInterval::from_rational(b, prec);
        CHECK((ia + ib).contains(a + b));
        CHECK((ia - ib).contains(a - b));
        CHECK((ia * ib).contains(a * b));
        CHECK((ia / ib).contains(a / b));
        CHECK((-ia).contains(-a));
        CHECK(ebound::pow(ia, 3).contains(a.pow(3)));
    }
}

TEST_CASE("doubling precision never widens")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        const Rational a = oracle::random_rational(rng, 1000, 999);
        const Rational b = oracle::random_rational(rng, 1000, 999) + Rational(1, 1000000);
        for (mpfr_prec_t prec : {32, 64, 128}) {
            const auto lowp = FloatInterval::from_rational(a, prec) * FloatInterval::from_rational(b, prec);
            const auto highp =
                FloatInterval::from_rational(a, 2 * prec) * FloatInterval::from_rational(b, 2 * prec);
            CHECK(lowp.contains(highp));
        }
    }
}

TEST_CASE("exp and log bracket known values")
{
    const FloatInterval zero = FloatInterval::from_rational(Rational(0), 64);
    const FloatInterval e0 = ebound::exp(zero);
    CHECK(e0.contains(Rational(1)));
    const FloatInterval l = ebound::log(FloatInterval::from_rational(Rational(1), 64));
    CHECK(l.contains(Rational(0)));
    // e^1 lies in (2.718281828, 2.718281829)
    const FloatInterval e1 = ebound::exp(FloatInterval::from_rational(Rational(1), 64));
    CHECK(mpfr_cmp_q(e1.lo(), Rational(2718281828, 1000000000).raw().get_mpq_t()) > 0);
    CHECK(mpfr_cmp_q(e1.hi(), Rational(2718281829, 1000000000).raw().get_mpq_t()) < 0);

    CHECK_THROWS_AS(ebound::log(FloatInterval::from_rationals(Rational(-1), Rational(1), 64)), ebound::DomainError);
}

TEST_CASE("division by an interval containing zero is rejected")
{
    const auto num = FloatInterval::from_rational(Rational(1), 64);
    const auto den = FloatInterval::from_rationals(Rational(-1, 10), Rational(1, 10), 64);
    CHECK_THROWS_AS(num / den, ebound::DomainError);
}

TEST_CASE("sign-straddling products")
{
    const auto a = FloatInterval::from_rationals(Rational(-2), Rational(3), 64);
    const auto b = FloatInterval::from_rationals(Rational(-5), Rational(7), 64);
    const auto p = a * b;
    CHECK(p.lower_rational() == Rational(-15));
    CHECK(p.upper_rational() == Rational(21));
    const auto m = ebound::abs(a);
    CHECK(m.lower_rational() == Rational(0));
    CHECK(m.upper_rational() == Rational(3));
}

TEST_CASE("directed decimal rendering")
{
    const auto third = FloatInterval::from_rational(Rational(1, 3), 200);
    CHECK(third.lo_str(5) == "3.3333e-01");
    CHECK(third.hi_str(5) == "3.3334e-01");
}
