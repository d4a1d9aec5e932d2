#include "ebound/coeffs.hpp"

#include <cmath>
#include <sstream>

#include "ebound/combinatorics.hpp"
#include "ebound/error.hpp"
#include "ebound/highprec.hpp"

namespace ebound {

namespace {

Rational signed_unit(unsigned long exponent)
{
    return Rational(exponent % 2 == 0 ? 1 : -1);
}

} // namespace

Rational e_closed_form(unsigned n)
{
    if (n == 0) {
        return Rational(1);
    }
    Rational total;
    for (unsigned k = 0; k <= n; ++k) {
        const Integer s = stirling1(n + k, k);
        if (s == 0) {
            continue;
        }
        const Rational outer = signed_unit(n + k) * Rational(s, factorial(n + k));
        Rational inner;
        for (unsigned m = k; m <= n; ++m) {
            inner += signed_unit(m) * Rational(Integer(1), factorial(m - k));
        }
        total += outer * inner;
    }
    return signed_unit(n) * total;
}

Rational f_coeff(unsigned n)
{
    return signed_unit(n) * e_closed_form(n);
}

std::vector<CoeffRecord> coefficient_table(unsigned n_max)
{
    std::vector<CoeffRecord> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        Rational e = e_closed_form(n);
        Rational f = signed_unit(n) * e;
        out.push_back({n, std::move(e), std::move(f)});
    }
    return out;
}

FloatInterval e_series_numeric(unsigned n, unsigned digits, mpfr_prec_t precision_bits)
{
    if (n == 0 || digits == 0) {
        throw InvalidArgument("e_series_numeric requires n >= 1 and digits >= 1");
    }
    if (precision_bits == 0) {
        precision_bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 64;
    }
    const Rational threshold = Rational(1) / Rational(Integer(10)).pow(digits + 10);

    FloatInterval sum(precision_bits);
    Rational previous_magnitude;
    for (unsigned k = 1; k <= series_term_cap; ++k) {
        const Rational term(stirling1(n + k, k), factorial(n + k));
        sum = sum + FloatInterval::from_rational(term, precision_bits);
        const Rational magnitude = term.abs();
        // Terms share one sign, so the running sum only grows in magnitude;
        // stop once terms are decreasing and negligible.
        const bool decreasing = k > 1 && magnitude < previous_magnitude;
        if (decreasing && magnitude < threshold * sum.midpoint().abs()) {
            return sum / enclose_constant_e(precision_bits);
        }
        previous_magnitude = magnitude;
    }
    throw ComputationError("series truncation cap exceeded");
}

GapReport f_monotonicity_gap(unsigned n, unsigned terms, mpfr_prec_t precision_bits)
{
    if (n == 0 || terms == 0) {
        throw InvalidArgument("f_monotonicity_gap requires n >= 1 and terms >= 1");
    }
    Rational partial;
    for (unsigned i = 1; i <= terms; ++i) {
        const Integer numerator = stirling1(n + i, i) + stirling1(n + i, static_cast<long>(i) - 1);
        partial += Rational(numerator, factorial(n + i + 1));
    }
    partial *= signed_unit(n);

    GapReport report{FloatInterval::from_rational(partial, precision_bits) / enclose_constant_e(precision_bits),
                     f_coeff(n) - f_coeff(n + 1)};
    if (report.exact.sign() <= 0) {
        throw ComputationError("f_" + std::to_string(n) + " - f_" + std::to_string(n + 1) + " is not positive");
    }
    if (!report.numeric.is_positive()) {
        throw ComputationError("truncated gap series for n = " + std::to_string(n) + " is not positive");
    }
    return report;
}

std::vector<std::pair<unsigned, std::string>> f_limit_probe(unsigned n_max)
{
    if (n_max == 0) {
        throw InvalidArgument("f_limit_probe requires N >= 1");
    }
    std::vector<std::pair<unsigned, std::string>> out;
    Rational previous;
    BigFloat value(128);
    for (unsigned n = 1; n <= n_max; ++n) {
        const Rational f = f_coeff(n);
        if (n > 1 && !(f < previous)) {
            throw ComputationError("f_n is not strictly decreasing at n = " + std::to_string(n));
        }
        mpfr_set_q(value.get(), f.raw().get_mpq_t(), MPFR_RNDN);
        char *buffer = nullptr;
        mpfr_asprintf(&buffer, "%.15Rg", value.get());
        out.emplace_back(n, buffer);
        mpfr_free_str(buffer);
        previous = f;
    }
    return out;
}

std::string export_bfile(unsigned n_max, BFileColumn which)
{
    std::ostringstream out;
    for (unsigned n = 0; n <= n_max; ++n) {
        const Rational e = e_closed_form(n);
        const Integer value = which == BFileColumn::numerators ? Integer(::abs(e.numerator())) : e.denominator();
        out << n << ' ' << value.get_str(10) << '\n';
    }
    return out.str();
}

std::vector<std::pair<unsigned, Integer>> parse_bfile(std::string_view text)
{
    std::vector<std::pair<unsigned, Integer>> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto space = line.find(' ');
        if (space == std::string_view::npos || space == 0 || space + 1 == line.size()) {
            throw ParseError("b-file line " + std::to_string(line_no) + " is not 'index value'");
        }
        const std::string index_text(line.substr(0, space));
        const std::string value_text(line.substr(space + 1));
        Integer index;
        Integer value;
        if (index.set_str(index_text, 10) != 0 || index < 0 || !index.fits_uint_p() ||
            value.set_str(value_text, 10) != 0) {
            throw ParseError("b-file line " + std::to_string(line_no) + " has a malformed number");
        }
        out.emplace_back(static_cast<unsigned>(index.get_ui()), value);
    }
    return out;
}

std::vector<Rational> rationals_from_bfiles(std::string_view numerators, std::string_view denominators)
{
    const auto nums = parse_bfile(numerators);
    const auto dens = parse_bfile(denominators);
    if (nums.size() != dens.size()) {
        throw ParseError("numerator and denominator b-files differ in length");
    }
    std::vector<Rational> out;
    out.reserve(nums.size());
    for (std::size_t i = 0; i < nums.size(); ++i) {
        if (nums[i].first != i || dens[i].first != i) {
            throw ParseError("b-file indices must run 0, 1, 2, ...");
        }
        out.push_back(signed_unit(i) * Rational(nums[i].second, dens[i].second));
    }
    return out;
}

} // namespace ebound
