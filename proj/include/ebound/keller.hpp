#ifndef EBOUND_KELLER_HPP
#define EBOUND_KELLER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ebound/highprec.hpp"
#include "ebound/interval.hpp"
#include "ebound/power_series.hpp"
#include "ebound/rational.hpp"

namespace ebound {

// Whether series coefficients are plain rationals or rational multiples of e.
enum class ScalarKind { rational, e_multiple };

struct ScaledSeries {
    SeriesPoly series;
    ScalarKind kind = ScalarKind::rational;
};

// Parses coefficient strings: rationals ("3/4"), e-multiples ("3/4*e",
// "e", "-e"), or "0" which fits either kind. Mixing rationals and
// e-multiples throws InvalidArgument.
ScaledSeries parse_scaled_series(std::span<const std::string> entries,
                                 std::optional<Rational> radius_hint = std::nullopt);

// a_k = e * e_k: the series of (1+x)^{1/x}, radius 1.
ScaledSeries e_scaled_series(std::size_t order);

// Truncated expansion
//   (y+1) G(y+c) - y G(y+c-1) ~ a0 + sum_{k=2}^{K} b_k / (y+c)^k,
// G(y) = sum a_k y^{-k}. The b_k are stored with their sign, so the value is
// always a0 + sum b_k/(y+c)^k whatever the shift. With kind e_multiple every
// stored number is the multiplier of e.
struct KellerExpansion {
    Rational a0;
    // b[k-2] multiplies 1/(y+c)^k.
    std::vector<Rational> b;
    Rational shift;
    unsigned K = 2;
    ScalarKind kind = ScalarKind::rational;
    // Expansion is only evaluated for y (and y + shift) above this.
    Rational validity_lower_y;

    const Rational &coefficient(unsigned k) const { return b.at(k - 2); }

    // {"a0", "shift", "K", "b", "scaled_by_e", "validity_lower_y"}
    std::string to_json() const;

    friend bool operator==(const KellerExpansion &, const KellerExpansion &) = default;
};

// C(k,0), C(k,1), ..., C(k,k-2), C(k,k-1) - 1: the multipliers of
// a_1..a_k in the 1/y^k term (OEIS A193815). Throws DomainError for k < 2.
std::vector<Integer> keller_row(unsigned k);

// 1 + max{1, 1/radius}; 2 when the radius is unknown.
Rational validity_threshold(const std::optional<Rational> &radius);

// Shift-free expansion: b_k = -(row_k . a).
KellerExpansion expand_plain(const ScaledSeries &a, unsigned K);
KellerExpansion expand_plain(const SeriesPoly &a, unsigned K);

// b_k = c sum_{i=1}^{k-1} C(k-1,i-1) a_i - row_k . a
KellerExpansion expand_shifted(const ScaledSeries &a, const Rational &c, unsigned K);
KellerExpansion expand_shifted(const SeriesPoly &a, const Rational &c, unsigned K);

// a0 + sum b_k/(y+c)^k, outward rounded. Throws DomainError
// ("outside stated validity region") unless y and y + c both exceed
// validity_lower_y.
FloatInterval expansion_eval(const KellerExpansion &expansion, const Rational &y, mpfr_prec_t precision_bits);
FloatInterval expansion_eval(const KellerExpansion &expansion, const FloatInterval &y,
                             mpfr_prec_t precision_bits);

// The limit of (y+1)G(y+c) - yG(y+c-1) as y -> inf: a_0, for every c.
Rational keller_limit(const SeriesPoly &a);

// (y+1) G(y+c) - y G(y+c-1) with G summed directly from the truncated
// series (times e for e-multiple series).
FloatInterval direct_difference(const ScaledSeries &a, const Rational &y, const Rational &c,
                                mpfr_prec_t precision_bits);

} // namespace ebound

#endif
