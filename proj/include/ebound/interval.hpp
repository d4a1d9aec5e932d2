#ifndef EBOUND_INTERVAL_HPP
#define EBOUND_INTERVAL_HPP

#include <cstdarg>
#include <cstdio>
#include <string>

#include <mpfr.h>

#include "ebound/rational.hpp"

namespace ebound {

// Owning wrapper around an mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision);
    BigFloat(const BigFloat &other);
    BigFloat(BigFloat &&other) noexcept;
    BigFloat &operator=(const BigFloat &other);
    BigFloat &operator=(BigFloat &&other) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

private:
    mpfr_t value_;
};

// Decimal rendering of an MPFR value with `digits` significant digits in
// scientific notation, rounded in the given direction.
std::string format_decimal(mpfr_srcptr x, int digits, mpfr_rnd_t rounding);

// Closed interval [lo, hi] with arbitrary-precision endpoints. Every
// operation rounds lo toward -inf and hi toward +inf, so the exact result
// of the operation on any points of the inputs lies inside the output.
class FloatInterval {
public:
    explicit FloatInterval(mpfr_prec_t precision);

    static FloatInterval from_rational(const Rational &value, mpfr_prec_t precision);
    // Outward-rounded hull of two rationals, lo <= hi required.
    static FloatInterval from_rationals(const Rational &lo, const Rational &hi, mpfr_prec_t precision);
    // [lo, +inf)
    static FloatInterval unbounded_above(const FloatInterval &lower, mpfr_prec_t precision);

    mpfr_srcptr lo() const { return lo_.get(); }
    mpfr_srcptr hi() const { return hi_.get(); }
    mpfr_ptr lo() { return lo_.get(); }
    mpfr_ptr hi() { return hi_.get(); }
    mpfr_prec_t precision() const { return lo_.precision(); }

    bool is_upper_unbounded() const { return mpfr_inf_p(hi_.get()) != 0; }
    bool contains(const Rational &value) const;
    bool strictly_contains(const Rational &value) const;
    bool contains(const FloatInterval &other) const;
    bool strictly_contains(const FloatInterval &other) const;
    bool contains_zero() const;
    bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }

    // Exact values of the endpoints. Requires finite endpoints.
    Rational lower_rational() const;
    Rational upper_rational() const;
    Rational midpoint() const;
    Rational width() const;

    // Directed decimal renderings of the endpoints.
    std::string lo_str(int digits) const { return format_decimal(lo(), digits, MPFR_RNDD); }
    std::string hi_str(int digits) const { return format_decimal(hi(), digits, MPFR_RNDU); }

    // Same interval rounded outward to another precision.
    FloatInterval rounded(mpfr_prec_t precision) const;

private:
    BigFloat lo_;
    BigFloat hi_;
};

FloatInterval operator+(const FloatInterval &a, const FloatInterval &b);
FloatInterval operator-(const FloatInterval &a, const FloatInterval &b);
FloatInterval operator*(const FloatInterval &a, const FloatInterval &b);
// Throws DomainError when b contains zero.
FloatInterval operator/(const FloatInterval &a, const FloatInterval &b);
FloatInterval operator-(const FloatInterval &a);

FloatInterval exp(const FloatInterval &x);
// Throws DomainError unless x > 0.
FloatInterval log(const FloatInterval &x);
FloatInterval pow(const FloatInterval &x, unsigned long n);
// Interval of |x|.
FloatInterval abs(const FloatInterval &x);

// Upper bound on |x| over the interval, rounded up, as an exact rational.
Rational magnitude_bound(const FloatInterval &x);

} // namespace ebound

#endif
