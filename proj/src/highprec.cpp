#include "ebound/highprec.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "ebound/combinatorics.hpp"
#include "ebound/error.hpp"

namespace ebound {

namespace {

void require_precision(mpfr_prec_t bits)
{
    if (bits < min_precision_bits || bits > MPFR_PREC_MAX / 2) {
        throw InvalidArgument("precision must be at least " + std::to_string(min_precision_bits) + " bits");
    }
}

constexpr mpfr_prec_t guard_bits = 32;

// Extra working bits to absorb the cancellation in differences of
// quantities of size ~ |y|.
mpfr_prec_t magnitude_bits(const Rational &y)
{
    const Integer q = y.abs().numerator() / y.denominator();
    return static_cast<mpfr_prec_t>(mpz_sizeinbase(q.get_mpz_t(), 2));
}

FloatInterval compute_e(mpfr_prec_t bits)
{
    // partial = sum_{k=0}^{K} K!/k!  satisfies partial_K = K * partial_{K-1} + 1.
    Integer partial = 1;
    Integer kfact = 1;
    unsigned long k = 0;
    FloatInterval out(bits);
    BigFloat next(bits);
    for (;;) {
        ++k;
        partial = partial * k + 1;
        kfact *= k;
        // Require (K+1)! > 2^(bits+2) before testing, so the tail is below
        // a quarter ulp of e.
        const Integer next_fact = kfact * (k + 1);
        if (mpz_sizeinbase(next_fact.get_mpz_t(), 2) < static_cast<std::size_t>(bits) + 3) {
            continue;
        }
        const Rational lower(partial, kfact);
        const Rational upper = lower + Rational(Integer(2), next_fact);
        mpfr_set_q(out.lo(), lower.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(out.hi(), upper.raw().get_mpq_t(), MPFR_RNDU);
        mpfr_set(next.get(), out.lo(), MPFR_RNDN);
        mpfr_nextabove(next.get());
        if (mpfr_lessequal_p(out.hi(), next.get())) {
            return out;
        }
    }
}

} // namespace

FloatInterval enclose_constant_e(mpfr_prec_t precision_bits)
{
    require_precision(precision_bits);
    static std::mutex mutex;
    static std::map<mpfr_prec_t, FloatInterval> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(precision_bits); it != cache.end()) {
            return it->second;
        }
    }
    FloatInterval e = compute_e(precision_bits);
    std::lock_guard lock(mutex);
    cache.emplace(precision_bits, e);
    return e;
}

FloatInterval eval_e_of_x(const Rational &x, mpfr_prec_t precision_bits)
{
    require_precision(precision_bits);
    if (x <= Rational(-1)) {
        throw DomainError("e(x) requires x > -1, got " + x.str());
    }
    if (x.is_zero()) {
        return enclose_constant_e(precision_bits);
    }
    const mpfr_prec_t work = precision_bits + guard_bits;
    const FloatInterval log_base = log(FloatInterval::from_rational(Rational(1) + x, work));
    const FloatInterval value = exp(log_base / FloatInterval::from_rational(x, work));
    return value.rounded(precision_bits);
}

FloatInterval e_function_of_y(const Rational &z, mpfr_prec_t precision_bits)
{
    if (z.is_zero()) {
        throw DomainError("G(y) = e(1/y) is undefined at y = 0");
    }
    return eval_e_of_x(Rational(1) / z, precision_bits);
}

FloatInterval keller_difference(const GFunction &g, const Rational &y, const Rational &c,
                                mpfr_prec_t precision_bits)
{
    require_precision(precision_bits);
    const mpfr_prec_t work = precision_bits + guard_bits + magnitude_bits(y) + magnitude_bits(c);
    const Rational z = y + c;
    const FloatInterval upper_term = FloatInterval::from_rational(y + Rational(1), work) * g(z, work);
    const FloatInterval lower_term = FloatInterval::from_rational(y, work) * g(z - Rational(1), work);
    return (upper_term - lower_term).rounded(precision_bits);
}

FloatInterval eval_keller_difference(const Rational &y, const Rational &c, mpfr_prec_t precision_bits)
{
    if (y + c <= Rational(1)) {
        throw DomainError("Keller difference requires y + c > 1");
    }
    return keller_difference(e_function_of_y, y, c, precision_bits);
}

std::vector<ProbeRow> convergence_probe(const GFunction &g, const FloatInterval &limit, const Rational &c,
                                        std::span<const Rational> y_values, mpfr_prec_t precision_bits)
{
    if (y_values.empty()) {
        throw InvalidArgument("probe needs at least one abscissa");
    }
    std::vector<ProbeRow> rows;
    rows.reserve(y_values.size());
    for (std::size_t i = 0; i < y_values.size(); ++i) {
        if (i > 0 && y_values[i] <= y_values[i - 1]) {
            throw InvalidArgument("probe abscissae must be strictly increasing");
        }
        const FloatInterval diff = keller_difference(g, y_values[i], c, precision_bits);
        ProbeRow row{y_values[i], abs(diff - limit), std::nullopt};
        if (!rows.empty()) {
            const Rational prev = rows.back().abs_error.midpoint();
            const Rational curr = row.abs_error.midpoint();
            if (!prev.is_zero() && !curr.is_zero() && y_values[i - 1].sign() > 0) {
                BigFloat num(precision_bits);
                BigFloat den(precision_bits);
                const Rational err_ratio = curr / prev;
                const Rational y_ratio = y_values[i] / y_values[i - 1];
                mpfr_set_q(num.get(), err_ratio.raw().get_mpq_t(), MPFR_RNDN);
                mpfr_set_q(den.get(), y_ratio.raw().get_mpq_t(), MPFR_RNDN);
                mpfr_log(num.get(), num.get(), MPFR_RNDN);
                mpfr_log(den.get(), den.get(), MPFR_RNDN);
                mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDN);
                row.slope = mpfr_get_d(num.get(), MPFR_RNDN);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ProbeRow> convergence_probe(const Rational &c, std::span<const Rational> y_values,
                                        mpfr_prec_t precision_bits)
{
    for (const auto &y : y_values) {
        if (y + c <= Rational(1)) {
            throw DomainError("Keller difference requires y + c > 1");
        }
    }
    return convergence_probe(e_function_of_y, enclose_constant_e(precision_bits), c, y_values, precision_bits);
}

std::string probe_to_csv(std::span<const ProbeRow> rows)
{
    std::ostringstream out;
    out << "y,abs_error,slope\n";
    for (const auto &row : rows) {
        const FloatInterval y = FloatInterval::from_rational(row.y, 128);
        const FloatInterval err = FloatInterval::from_rational(row.abs_error.midpoint(), 128);
        out << format_decimal(y.lo(), 20, MPFR_RNDN) << ',' << format_decimal(err.lo(), 20, MPFR_RNDN) << ',';
        if (row.slope) {
            BigFloat s(64);
            mpfr_set_d(s.get(), *row.slope, MPFR_RNDN);
            out << format_decimal(s.get(), 20, MPFR_RNDN);
        } else {
            out << "nan";
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ebound
