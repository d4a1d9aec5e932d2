#ifndef EBOUND_COEFFS_HPP
#define EBOUND_COEFFS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ebound/interval.hpp"
#include "ebound/rational.hpp"

namespace ebound {

// Maclaurin coefficient e_n of (1+x)^{1/x} / e, from the finite double sum
//
//   e_n = (-1)^n sum_{k=0}^{n} (-1)^{n+k} S1(n+k,k)/(n+k)!  sum_{m=k}^{n} (-1)^m/(m-k)!
//
// (terms with m < k vanish). e_0 = 1.
Rational e_closed_form(unsigned n);

// f_n = (-1)^n e_n, positive and strictly decreasing for n >= 1.
Rational f_coeff(unsigned n);

struct CoeffRecord {
    unsigned n;
    Rational e;
    Rational f;
};

std::vector<CoeffRecord> coefficient_table(unsigned n_max);

// Numeric evaluation of e_n = e^{-1} sum_{k>=1} S1(n+k,k)/(n+k)!.
//
// The series is summed until the latest term drops below
// 10^-(digits+10) of the running sum (at most series_term_cap terms). The
// returned interval encloses the truncated sum times e^{-1}; it is not a
// certified enclosure of e_n itself. precision_bits = 0 picks a working
// precision from `digits`.
FloatInterval e_series_numeric(unsigned n, unsigned digits, mpfr_prec_t precision_bits = 0);

constexpr unsigned series_term_cap = 10000;

struct GapReport {
    // Truncated series for f_n - f_{n+1}.
    FloatInterval numeric;
    // Exact f_n - f_{n+1}.
    Rational exact;
};

// f_n - f_{n+1} = (-1)^n e^{-1} sum_{i>=1} [S1(n+i,i) + S1(n+i,i-1)] / (n+i+1)!,
// truncated after `terms` terms. Throws ComputationError if either the
// numeric or the exact gap is not strictly positive.
GapReport f_monotonicity_gap(unsigned n, unsigned terms, mpfr_prec_t precision_bits = 256);

// (n, f_n to 15 significant digits) for n = 1..n_max. Throws
// ComputationError if the table is not strictly decreasing.
std::vector<std::pair<unsigned, std::string>> f_limit_probe(unsigned n_max);

enum class BFileColumn { numerators, denominators };

// OEIS b-file: "n value\n" for n = 0..n_max, value = |numerator(e_n)|
// (A055505) or denominator(e_n) (A055535).
std::string export_bfile(unsigned n_max, BFileColumn which);

// Parses b-file text into (index, value) pairs. Comment lines starting with
// '#' and blank lines are skipped.
std::vector<std::pair<unsigned, Integer>> parse_bfile(std::string_view text);

// Rebuilds e_0..e_N from a numerator and a denominator b-file, restoring
// the sign (-1)^n.
std::vector<Rational> rationals_from_bfiles(std::string_view numerators, std::string_view denominators);

} // namespace ebound

#endif
