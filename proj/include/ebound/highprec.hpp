#ifndef EBOUND_HIGHPREC_HPP
#define EBOUND_HIGHPREC_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ebound/interval.hpp"
#include "ebound/rational.hpp"

namespace ebound {

constexpr mpfr_prec_t default_precision_bits = 256;
constexpr mpfr_prec_t min_precision_bits = 16;

// Enclosure of e from the factorial series sum 1/k! with tail bound
// 2/(K+1)!. The result is one ulp wide at the requested precision, so its
// width is at most 2^(2 - precision_bits). Cached per precision.
FloatInterval enclose_constant_e(mpfr_prec_t precision_bits);

// (1+x)^(1/x) for x > -1, x != 0, and e at x = 0.
FloatInterval eval_e_of_x(const Rational &x, mpfr_prec_t precision_bits);

// A function G(z) evaluated to an enclosure at the given precision.
using GFunction = std::function<FloatInterval(const Rational &z, mpfr_prec_t precision_bits)>;

// G(z) = (1 + 1/z)^z = e(1/z), the asymptotic form of e(x).
FloatInterval e_function_of_y(const Rational &z, mpfr_prec_t precision_bits);

// (y+1) G(y+c) - y G(y+c-1).
FloatInterval keller_difference(const GFunction &g, const Rational &y, const Rational &c,
                                mpfr_prec_t precision_bits);

// (y+1)(1 + 1/(y+c))^(y+c) - y(1 + 1/(y+c-1))^(y+c-1); requires y + c > 1.
FloatInterval eval_keller_difference(const Rational &y, const Rational &c, mpfr_prec_t precision_bits);

struct ProbeRow {
    Rational y;
    // Enclosure of |difference - limit|.
    FloatInterval abs_error;
    // log-log slope of the error against the previous row; absent on the
    // first row or when either error midpoint is zero.
    std::optional<double> slope;
};

std::vector<ProbeRow> convergence_probe(const GFunction &g, const FloatInterval &limit, const Rational &c,
                                        std::span<const Rational> y_values, mpfr_prec_t precision_bits);

// Probe of the e-function difference against enclose_constant_e.
std::vector<ProbeRow> convergence_probe(const Rational &c, std::span<const Rational> y_values,
                                        mpfr_prec_t precision_bits);

// CSV with header "y,abs_error,slope"; decimals with 20 significant digits.
// A missing slope is written as "nan".
std::string probe_to_csv(std::span<const ProbeRow> rows);

} // namespace ebound

#endif
