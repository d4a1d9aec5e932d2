#include <doctest.h>

#include <json.hpp>
#include <random>

#include "ebound/enclosure.hpp"
#include "ebound/error.hpp"
#include "oracles.hpp"

using ebound::Integer;
using ebound::Rational;

namespace {

Rational q(const char *text)
{
    return Rational::parse(text);
}

Rational random_unit(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> den(2, 50);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(1, d - 1);
    return Rational(Integer(num(rng)), Integer(d));
}

} // namespace

TEST_CASE("partial-sum multipliers")
{
    CHECK(ebound::partial_sum_multiplier(q("1/2"), 0) == Rational(1));
    CHECK(ebound::partial_sum_multiplier(q("1/2"), 1) == q("3/4"));
    CHECK(ebound::partial_sum_multiplier(q("1/2"), 2) == q("83/96"));
    CHECK(ebound::partial_sum_multiplier(q("1/2"), 3) == q("311/384"));
    CHECK(ebound::partial_sum_multiplier(q("-1/2"), 3) == q("545/384"));
    CHECK_THROWS_AS(ebound::partial_sum_multiplier(Rational(1), 2), ebound::DomainError);
    CHECK_THROWS_AS(ebound::partial_sum_multiplier(Rational(-1), 2), ebound::DomainError);
}

TEST_CASE("partial sums against a direct sum")
{
    std::mt19937_64 rng(5);
    const auto e = oracle::e_coeffs(12);
    for (int i = 0; i < 20; ++i) {
        Rational x = random_unit(rng);
        if (i % 2 == 1) {
            x = -x;
        }
        Rational sum;
        Rational power(1);
        for (unsigned k = 0; k <= 12; ++k) {
            sum += e[k] * power;
            power *= x;
        }
        CHECK(ebound::partial_sum_multiplier(x, 12) == sum);
    }
}

TEST_CASE("two-sided enclosure for positive x")
{
    const auto r = ebound::enclose(q("1/2"), 2);
    CHECK(r.sided == ebound::Sidedness::two_sided);
    REQUIRE(r.lower.has_value());
    REQUIRE(r.upper.has_value());
    CHECK(r.lower->multiplier == q("3/4"));
    CHECK(r.upper->multiplier == q("83/96"));
    CHECK(r.numeric.contains(ebound::eval_e_of_x(q("1/2"), 200)));
    CHECK(r.numeric.contains(Rational(9, 4)));

    const auto first = ebound::enclose(q("1/4"), 1);
    CHECK(first.upper->multiplier == Rational(1));
    CHECK(first.lower->multiplier == q("7/8"));
}

TEST_CASE("lower-only enclosure for negative x")
{
    const auto r = ebound::enclose(q("-1/2"), 3);
    CHECK(r.sided == ebound::Sidedness::lower_only);
    REQUIRE(r.lower.has_value());
    CHECK_FALSE(r.upper.has_value());
    CHECK(r.lower->multiplier == q("545/384"));
    CHECK(r.numeric.is_upper_unbounded());
    REQUIRE(r.estimate.has_value());
    CHECK(r.estimate->contains(Rational(4)));
    CHECK(r.lower->numeric(200).upper_rational() < Rational(4));
}

TEST_CASE("enclosure at zero")
{
    const auto r = ebound::enclose(Rational(0), 4);
    CHECK(r.lower->multiplier == Rational(1));
    CHECK(r.upper->multiplier == Rational(1));
    CHECK(r.numeric.contains(ebound::enclose_constant_e(256)));
}

TEST_CASE("enclosure domain")
{
    CHECK_THROWS_AS(ebound::enclose(Rational(1), 3), ebound::DomainError);
    CHECK_THROWS_AS(ebound::enclose(q("-3/2"), 3), ebound::DomainError);
    CHECK_THROWS_AS(ebound::enclose(q("1/2"), 0), ebound::InvalidArgument);
    CHECK_THROWS_AS(ebound::enclosure_defect(q("-1/2"), 3), ebound::DomainError);
    CHECK_THROWS_AS(ebound::enclosure_defect(Rational(0), 3), ebound::DomainError);
}

TEST_CASE("interlacing of partial sums")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        const Rational x = random_unit(rng);
        CAPTURE(x.str());
        const auto value = ebound::eval_e_of_x(x, 200);
        for (unsigned k = 1; k <= 20; k += 2) {
            const Rational odd = ebound::partial_sum_multiplier(x, k);
            const Rational even = ebound::partial_sum_multiplier(x, k - 1);
            CHECK(odd < even);
            CHECK(odd < ebound::partial_sum_multiplier(x, k + 2));
            CHECK(ebound::partial_sum_multiplier(x, k + 1) < even);
            const auto r = ebound::enclose(x, k + 1);
            CHECK(r.numeric.contains(value));
        }
    }
}

TEST_CASE("negative-x partial sums increase towards the value")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 20; ++i) {
        const Rational x = -random_unit(rng);
        const auto value = ebound::eval_e_of_x(x, 200);
        Rational previous = ebound::partial_sum_multiplier(x, 1);
        for (unsigned n = 2; n <= 16; ++n) {
            const Rational m = ebound::partial_sum_multiplier(x, n);
            CHECK(m > previous);
            previous = m;
        }
        const auto r = ebound::enclose(x, 16);
        CHECK(r.numeric.lower_rational() <= value.lower_rational());
    }
}

TEST_CASE("defect")
{
    CHECK(ebound::enclosure_defect(q("1/2"), 2) == q("11/96"));
    CHECK(ebound::enclosure_defect(q("1/2"), 3) == q("7/128"));
    CHECK(ebound::enclosure_defect(q("1/4"), 1) == q("1/8"));
    // Consecutive partial sums differ by one term, so the defect is f_n x^n.
    const auto e = oracle::e_coeffs(15);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) {
        const Rational x = random_unit(rng);
        Rational previous(1);
        for (unsigned n = 1; n <= 15; ++n) {
            const Rational d = ebound::enclosure_defect(x, n);
            CHECK(d == e[n].abs() * x.pow(n));
            CHECK(d > Rational(0));
            CHECK(d < previous);
            previous = d;
        }
    }
}

TEST_CASE("report JSON")
{
    const auto two = nlohmann::json::parse(ebound::enclose(q("1/2"), 2).to_json(20));
    for (const char *key : {"x", "n", "lower_mul", "upper_mul", "sided", "numeric_lo", "numeric_hi",
                            "precision_bits", "digits"}) {
        CHECK(two.contains(key));
    }
    CHECK(two["x"] == "1/2");
    CHECK(two["n"] == 2);
    CHECK(two["lower_mul"] == "3/4");
    CHECK(two["upper_mul"] == "83/96");
    CHECK(two["sided"] == "two");
    CHECK(two["digits"] == 20);
    CHECK_FALSE(two.contains("estimate"));

    const auto one = nlohmann::json::parse(ebound::enclose(q("-1/2"), 3).to_json());
    CHECK(one["sided"] == "lower");
    CHECK(one["upper_mul"].is_null());
    CHECK(one["numeric_hi"].is_null());
    CHECK(one.contains("estimate"));
}
