#include "ebound/power_series.hpp"

#include <algorithm>

#include <json.hpp>

#include "ebound/error.hpp"

namespace ebound {

SeriesPoly::SeriesPoly(std::size_t order) : coeffs_(order + 1) {}

SeriesPoly::SeriesPoly(std::vector<Rational> coeffs, std::optional<Rational> radius_hint)
    : coeffs_(std::move(coeffs)), radius_hint_(std::move(radius_hint))
{
    if (coeffs_.empty()) {
        throw InvalidArgument("series needs at least one coefficient");
    }
    if (radius_hint_ && radius_hint_->sign() <= 0) {
        throw InvalidArgument("radius hint must be positive");
    }
}

SeriesPoly SeriesPoly::truncated(std::size_t order) const
{
    if (order > this->order()) {
        throw InvalidArgument("cannot extend a truncated series");
    }
    SeriesPoly out(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), radius_hint_);
    return out;
}

std::string SeriesPoly::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &c : coeffs_) {
        arr.push_back(c.str());
    }
    return arr.dump();
}

SeriesPoly ps_add(const SeriesPoly &a, const SeriesPoly &b)
{
    SeriesPoly out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) {
        out[k] = a[k] + b[k];
    }
    return out;
}

SeriesPoly ps_sub(const SeriesPoly &a, const SeriesPoly &b)
{
    SeriesPoly out(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= out.order(); ++k) {
        out[k] = a[k] - b[k];
    }
    return out;
}

SeriesPoly ps_scale(const SeriesPoly &a, const Rational &s)
{
    SeriesPoly out = a;
    for (std::size_t k = 0; k <= out.order(); ++k) {
        out[k] *= s;
    }
    return out;
}

SeriesPoly ps_mul(const SeriesPoly &a, const SeriesPoly &b)
{
    SeriesPoly out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) {
        Rational acc;
        for (std::size_t k = 0; k <= n; ++k) {
            if (!a[k].is_zero() && !b[n - k].is_zero()) {
                acc += a[k] * b[n - k];
            }
        }
        out[n] = std::move(acc);
    }
    return out;
}

SeriesPoly ps_exp(const SeriesPoly &a)
{
    if (!a[0].is_zero()) {
        throw DomainError("constant term must vanish");
    }
    SeriesPoly out(a.order());
    out[0] = 1;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!a[k].is_zero()) {
                acc += Rational(static_cast<long>(k)) * a[k] * out[n - k];
            }
        }
        out[n] = acc / Rational(static_cast<long>(n));
    }
    return out;
}

SeriesPoly ps_log1p(std::size_t order)
{
    SeriesPoly out(order);
    for (std::size_t k = 1; k <= order; ++k) {
        out[k] = Rational(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
    }
    return out;
}

SeriesPoly ps_shift_down(const SeriesPoly &a)
{
    if (a.order() == 0) {
        throw InvalidArgument("shift-down needs order >= 1");
    }
    if (!a[0].is_zero()) {
        throw DomainError("shift-down needs a vanishing constant term");
    }
    return SeriesPoly(std::vector<Rational>(a.coeffs().begin() + 1, a.coeffs().end()));
}

SeriesPoly oracle_e_coeffs(std::size_t order)
{
    // ln(1+x)/x - 1 has constant term 1 - 1 = 0.
    SeriesPoly exponent = ps_shift_down(ps_log1p(order + 1));
    exponent[0] -= 1;
    SeriesPoly out = ps_exp(exponent);
    out.set_radius_hint(Rational(1));
    return out;
}

} // namespace ebound
