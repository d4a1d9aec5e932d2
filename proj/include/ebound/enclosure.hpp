#ifndef EBOUND_ENCLOSURE_HPP
#define EBOUND_ENCLOSURE_HPP

#include <compare>
#include <optional>
#include <string>

#include "ebound/highprec.hpp"
#include "ebound/interval.hpp"
#include "ebound/rational.hpp"

namespace ebound {

// The exact value multiplier * e. Since e > 0, EMultiples order like their
// multipliers.
struct EMultiple {
    Rational multiplier;

    friend bool operator==(const EMultiple &, const EMultiple &) = default;
    friend std::strong_ordering operator<=>(const EMultiple &a, const EMultiple &b)
    {
        return a.multiplier <=> b.multiplier;
    }

    // Outward-rounded enclosure of multiplier * e.
    FloatInterval numeric(mpfr_prec_t precision_bits) const;
};

enum class Sidedness { two_sided, lower_only };

// Bounds on (1+x)^{1/x} from the alternating partial sums
//   e_n(x) = e (1 + sum_{k=1}^{n} (-1)^k f_k x^k).
struct BoundReport {
    Rational x;
    unsigned order;
    std::optional<EMultiple> lower;
    std::optional<EMultiple> upper;
    Sidedness sided;
    // [lower.lo, upper.hi]; the upper end is +inf for lower-only reports.
    FloatInterval numeric;
    // Lower-only reports carry a direct evaluation of (1+x)^{1/x} for
    // display. It is not part of the bound.
    std::optional<FloatInterval> estimate;

    // {"x", "n", "lower_mul", "upper_mul", "sided", "numeric_lo", "numeric_hi",
    //  "precision_bits", "digits"}; absent bounds are null. Lower-only
    // reports add "estimate".
    std::string to_json(int digits = 30) const;
};

// e_n(x) / e = 1 + sum_{k=1}^{n} (-1)^k f_k x^k. Requires -1 < x < 1.
Rational partial_sum_multiplier(const Rational &x, unsigned n);

// For x in (0,1): lower = largest odd-order partial sum <= n, upper = largest
// even-order partial sum <= n. For x in (-1,0): lower = order-n partial sum,
// no upper bound. For x = 0 both bounds equal e.
BoundReport enclose(const Rational &x, unsigned n, mpfr_prec_t precision_bits = default_precision_bits);

// upper - lower multiplier of enclose(x, n); requires 0 < x < 1.
Rational enclosure_defect(const Rational &x, unsigned n);

} // namespace ebound

#endif
