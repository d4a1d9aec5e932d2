#ifndef EBOUND_POWER_SERIES_HPP
#define EBOUND_POWER_SERIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ebound/rational.hpp"

namespace ebound {

// Truncated formal power series c_0 + c_1 x + ... + c_N x^N with exact
// rational coefficients. The truncation order N travels with the value:
// binary operations truncate to the smaller order, never extrapolate.
class SeriesPoly {
public:
    // The zero series of the given order.
    explicit SeriesPoly(std::size_t order);
    // Throws InvalidArgument on an empty coefficient list.
    explicit SeriesPoly(std::vector<Rational> coeffs, std::optional<Rational> radius_hint = std::nullopt);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational> &coeffs() const { return coeffs_; }
    const Rational &operator[](std::size_t k) const { return coeffs_[k]; }
    Rational &operator[](std::size_t k) { return coeffs_[k]; }

    // Radius of convergence of the underlying Maclaurin series, if known.
    // Metadata only; nothing here enforces it.
    const std::optional<Rational> &radius_hint() const { return radius_hint_; }
    void set_radius_hint(std::optional<Rational> r) { radius_hint_ = std::move(r); }

    SeriesPoly truncated(std::size_t order) const;

    // JSON array of rational strings, lowest order first.
    std::string to_json() const;

    friend bool operator==(const SeriesPoly &a, const SeriesPoly &b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
    std::optional<Rational> radius_hint_;
};

SeriesPoly ps_add(const SeriesPoly &a, const SeriesPoly &b);
SeriesPoly ps_sub(const SeriesPoly &a, const SeriesPoly &b);
SeriesPoly ps_scale(const SeriesPoly &a, const Rational &s);

// Cauchy product truncated at min(a.order, b.order).
SeriesPoly ps_mul(const SeriesPoly &a, const SeriesPoly &b);

// exp(a) for a series with vanishing constant term, via
//   n * b_n = sum_{k=1}^{n} k a_k b_{n-k},  b_0 = 1.
// Throws DomainError("constant term must vanish") otherwise.
SeriesPoly ps_exp(const SeriesPoly &a);

// ln(1+x) = x - x^2/2 + x^3/3 - ...
SeriesPoly ps_log1p(std::size_t order);

// Drops the constant term and relabels: sum c_k x^k -> sum c_{k+1} x^k.
// Requires c_0 = 0 and order >= 1. Used for ln(1+x)/x.
SeriesPoly ps_shift_down(const SeriesPoly &a);

// 1 + sum_{k>=1} e_k x^k = exp(ln(1+x)/x - 1), the Maclaurin series of
// (1+x)^{1/x} / e, computed by series arithmetic only.
SeriesPoly oracle_e_coeffs(std::size_t order);

} // namespace ebound

#endif
