#include "ebound/enclosure.hpp"

#include <json.hpp>

#include "ebound/coeffs.hpp"
#include "ebound/error.hpp"

namespace ebound {

namespace {

void require_open_unit(const Rational &x)
{
    if (!(Rational(-1) < x && x < Rational(1))) {
        throw DomainError("x must lie in (-1, 1), got " + x.str());
    }
}

} // namespace

FloatInterval EMultiple::numeric(mpfr_prec_t precision_bits) const
{
    return FloatInterval::from_rational(multiplier, precision_bits) * enclose_constant_e(precision_bits);
}

Rational partial_sum_multiplier(const Rational &x, unsigned n)
{
    require_open_unit(x);
    Rational total(1);
    Rational power(1);
    for (unsigned k = 1; k <= n; ++k) {
        power *= x;
        const Rational term = f_coeff(k) * power;
        if (k % 2 == 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

BoundReport enclose(const Rational &x, unsigned n, mpfr_prec_t precision_bits)
{
    require_open_unit(x);
    if (n == 0) {
        throw InvalidArgument("enclosure order must be at least 1");
    }
    BoundReport report{x, n, std::nullopt, std::nullopt, Sidedness::two_sided, FloatInterval(precision_bits),
                       std::nullopt};

    if (x.is_zero()) {
        report.lower = EMultiple{Rational(1)};
        report.upper = report.lower;
    } else if (x.sign() > 0) {
        const unsigned odd = (n % 2 == 1) ? n : n - 1;
        const unsigned even = (n % 2 == 0) ? n : n - 1;
        report.lower = EMultiple{partial_sum_multiplier(x, odd)};
        report.upper = EMultiple{partial_sum_multiplier(x, even)};
        if (!(report.lower < report.upper)) {
            throw ComputationError("partial sums failed to interlace at x = " + x.str());
        }
    } else {
        report.lower = EMultiple{partial_sum_multiplier(x, n)};
        report.sided = Sidedness::lower_only;
    }

    const FloatInterval lower = report.lower->numeric(precision_bits);
    if (report.upper) {
        const FloatInterval upper = report.upper->numeric(precision_bits);
        mpfr_set(report.numeric.lo(), lower.lo(), MPFR_RNDD);
        mpfr_set(report.numeric.hi(), upper.hi(), MPFR_RNDU);
    } else {
        report.numeric = FloatInterval::unbounded_above(lower, precision_bits);
        report.estimate = eval_e_of_x(x, precision_bits);
    }
    return report;
}

Rational enclosure_defect(const Rational &x, unsigned n)
{
    if (!(Rational(0) < x && x < Rational(1))) {
        throw DomainError("enclosure defect requires x in (0, 1), got " + x.str());
    }
    if (n == 0) {
        throw InvalidArgument("enclosure order must be at least 1");
    }
    const unsigned odd = (n % 2 == 1) ? n : n - 1;
    const unsigned even = (n % 2 == 0) ? n : n - 1;
    return partial_sum_multiplier(x, even) - partial_sum_multiplier(x, odd);
}

std::string BoundReport::to_json(int digits) const
{
    nlohmann::ordered_json j;
    j["x"] = x.str();
    j["n"] = order;
    j["lower_mul"] = lower ? nlohmann::ordered_json(lower->multiplier.str()) : nlohmann::ordered_json(nullptr);
    j["upper_mul"] = upper ? nlohmann::ordered_json(upper->multiplier.str()) : nlohmann::ordered_json(nullptr);
    j["sided"] = sided == Sidedness::two_sided ? "two" : "lower";
    j["numeric_lo"] = numeric.lo_str(digits);
    j["numeric_hi"] = upper ? nlohmann::ordered_json(numeric.hi_str(digits)) : nlohmann::ordered_json(nullptr);
    j["precision_bits"] = numeric.precision();
    j["digits"] = digits;
    if (estimate) {
        j["estimate"] = format_decimal(FloatInterval::from_rational(estimate->midpoint(), numeric.precision()).lo(),
                                       digits, MPFR_RNDN);
    }
    return j.dump();
}

} // namespace ebound
