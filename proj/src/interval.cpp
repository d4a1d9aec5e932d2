#include "ebound/interval.hpp"

#include <algorithm>
#include <utility>

#include "ebound/error.hpp"

namespace ebound {

BigFloat::BigFloat(mpfr_prec_t precision)
{
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat &other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&other) noexcept
{
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

BigFloat &BigFloat::operator=(const BigFloat &other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept
{
    if (this != &other) {
        mpfr_swap(value_, other.value_);
    }
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(value_);
}

std::string format_decimal(mpfr_srcptr x, int digits, mpfr_rnd_t rounding)
{
    if (mpfr_inf_p(x)) {
        return mpfr_sgn(x) > 0 ? "inf" : "-inf";
    }
    char *buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*R*e", std::max(digits, 1) - 1, rounding, x);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

namespace {

mpfr_prec_t joint_precision(const FloatInterval &a, const FloatInterval &b)
{
    return std::max(a.precision(), b.precision());
}

} // namespace

FloatInterval::FloatInterval(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

FloatInterval FloatInterval::from_rational(const Rational &value, mpfr_prec_t precision)
{
    FloatInterval out(precision);
    mpfr_set_q(out.lo(), value.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi(), value.raw().get_mpq_t(), MPFR_RNDU);
    return out;
}

FloatInterval FloatInterval::from_rationals(const Rational &lo, const Rational &hi, mpfr_prec_t precision)
{
    if (hi < lo) {
        throw InvalidArgument("interval endpoints out of order");
    }
    FloatInterval out(precision);
    mpfr_set_q(out.lo(), lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi(), hi.raw().get_mpq_t(), MPFR_RNDU);
    return out;
}

FloatInterval FloatInterval::unbounded_above(const FloatInterval &lower, mpfr_prec_t precision)
{
    FloatInterval out(precision);
    mpfr_set(out.lo(), lower.lo(), MPFR_RNDD);
    mpfr_set_inf(out.hi(), 1);
    return out;
}

bool FloatInterval::contains(const Rational &value) const
{
    const mpq_srcptr q = value.raw().get_mpq_t();
    return mpfr_cmp_q(lo(), q) <= 0 && mpfr_cmp_q(hi(), q) >= 0;
}

bool FloatInterval::strictly_contains(const Rational &value) const
{
    const mpq_srcptr q = value.raw().get_mpq_t();
    return mpfr_cmp_q(lo(), q) < 0 && mpfr_cmp_q(hi(), q) > 0;
}

bool FloatInterval::contains(const FloatInterval &other) const
{
    return mpfr_lessequal_p(lo(), other.lo()) && mpfr_greaterequal_p(hi(), other.hi());
}

bool FloatInterval::strictly_contains(const FloatInterval &other) const
{
    return mpfr_less_p(lo(), other.lo()) && mpfr_greater_p(hi(), other.hi());
}

bool FloatInterval::contains_zero() const
{
    return mpfr_sgn(lo()) <= 0 && mpfr_sgn(hi()) >= 0;
}

Rational FloatInterval::lower_rational() const
{
    if (!mpfr_number_p(lo())) {
        throw DomainError("interval endpoint is not finite");
    }
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo());
    return Rational(q.get_num(), q.get_den());
}

Rational FloatInterval::upper_rational() const
{
    if (!mpfr_number_p(hi())) {
        throw DomainError("interval endpoint is not finite");
    }
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi());
    return Rational(q.get_num(), q.get_den());
}

Rational FloatInterval::midpoint() const
{
    return (lower_rational() + upper_rational()) / Rational(2);
}

Rational FloatInterval::width() const
{
    return upper_rational() - lower_rational();
}

FloatInterval FloatInterval::rounded(mpfr_prec_t precision) const
{
    FloatInterval out(precision);
    mpfr_set(out.lo(), lo(), MPFR_RNDD);
    mpfr_set(out.hi(), hi(), MPFR_RNDU);
    return out;
}

FloatInterval operator+(const FloatInterval &a, const FloatInterval &b)
{
    FloatInterval out(joint_precision(a, b));
    mpfr_add(out.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(out.hi(), a.hi(), b.hi(), MPFR_RNDU);
    return out;
}

FloatInterval operator-(const FloatInterval &a, const FloatInterval &b)
{
    FloatInterval out(joint_precision(a, b));
    mpfr_sub(out.lo(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(out.hi(), a.hi(), b.lo(), MPFR_RNDU);
    return out;
}

FloatInterval operator-(const FloatInterval &a)
{
    FloatInterval out(a.precision());
    mpfr_neg(out.lo(), a.hi(), MPFR_RNDD);
    mpfr_neg(out.hi(), a.lo(), MPFR_RNDU);
    return out;
}

namespace {

// Endpoint-product form shared by multiplication and division: the result
// hull is spanned by op(x_i, y_j) over the four endpoint pairs.
template <typename Op>
FloatInterval endpoint_hull(const FloatInterval &a, const FloatInterval &b, Op op)
{
    const mpfr_prec_t prec = joint_precision(a, b);
    FloatInterval out(prec);
    BigFloat down(prec);
    BigFloat up(prec);
    mpfr_set_inf(out.lo(), 1);
    mpfr_set_inf(out.hi(), -1);
    for (mpfr_srcptr x : {a.lo(), a.hi()}) {
        for (mpfr_srcptr y : {b.lo(), b.hi()}) {
            op(down.get(), x, y, MPFR_RNDD);
            op(up.get(), x, y, MPFR_RNDU);
            mpfr_min(out.lo(), out.lo(), down.get(), MPFR_RNDD);
            mpfr_max(out.hi(), out.hi(), up.get(), MPFR_RNDU);
        }
    }
    return out;
}

} // namespace

FloatInterval operator*(const FloatInterval &a, const FloatInterval &b)
{
    return endpoint_hull(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
        mpfr_mul(r, x, y, rnd);
    });
}

FloatInterval operator/(const FloatInterval &a, const FloatInterval &b)
{
    if (b.contains_zero()) {
        throw DomainError("interval division by an interval containing zero");
    }
    return endpoint_hull(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
        mpfr_div(r, x, y, rnd);
    });
}

FloatInterval exp(const FloatInterval &x)
{
    FloatInterval out(x.precision());
    mpfr_exp(out.lo(), x.lo(), MPFR_RNDD);
    mpfr_exp(out.hi(), x.hi(), MPFR_RNDU);
    return out;
}

FloatInterval log(const FloatInterval &x)
{
    if (!x.is_positive()) {
        throw DomainError("logarithm of an interval that is not positive");
    }
    FloatInterval out(x.precision());
    mpfr_log(out.lo(), x.lo(), MPFR_RNDD);
    mpfr_log(out.hi(), x.hi(), MPFR_RNDU);
    return out;
}

FloatInterval pow(const FloatInterval &x, unsigned long n)
{
    FloatInterval result = FloatInterval::from_rational(Rational(1), x.precision());
    FloatInterval base = x;
    for (unsigned long i = 0; i < n; ++i) {
        result = result * base;
    }
    return result;
}

FloatInterval abs(const FloatInterval &x)
{
    if (mpfr_sgn(x.lo()) >= 0) {
        return x;
    }
    if (mpfr_sgn(x.hi()) <= 0) {
        return -x;
    }
    FloatInterval out(x.precision());
    mpfr_set_zero(out.lo(), 1);
    mpfr_abs(out.hi(), x.lo(), MPFR_RNDU);
    mpfr_max(out.hi(), out.hi(), x.hi(), MPFR_RNDU);
    return out;
}

Rational magnitude_bound(const FloatInterval &x)
{
    return abs(x).upper_rational();
}

} // namespace ebound
