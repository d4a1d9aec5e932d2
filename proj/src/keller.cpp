#include "ebound/keller.hpp"

#include <algorithm>

#include <json.hpp>

#include "ebound/combinatorics.hpp"
#include "ebound/error.hpp"

namespace ebound {

namespace {

void require_order(const SeriesPoly &a, unsigned K)
{
    if (K < 2) {
        throw InvalidArgument("expansion order K must be at least 2");
    }
    if (a.order() < K) {
        throw InvalidArgument("series order " + std::to_string(a.order()) + " is below expansion order " +
                              std::to_string(K));
    }
}

// row_k . a
Rational row_dot(const SeriesPoly &a, unsigned k)
{
    const auto row = keller_row(k);
    Rational acc;
    for (unsigned i = 1; i <= k; ++i) {
        acc += Rational(row[i - 1]) * a[i];
    }
    return acc;
}

KellerExpansion skeleton(const ScaledSeries &a, const Rational &c, unsigned K)
{
    KellerExpansion out;
    out.a0 = a.series[0];
    out.shift = c;
    out.K = K;
    out.kind = a.kind;
    out.validity_lower_y = validity_threshold(a.series.radius_hint());
    out.b.reserve(K - 1);
    return out;
}

void require_valid(const KellerExpansion &expansion, bool y_ok, bool z_ok)
{
    if (!y_ok || !z_ok) {
        throw DomainError("outside stated validity region (y and y + c must exceed " +
                          expansion.validity_lower_y.str() + ")");
    }
}

} // namespace

ScaledSeries parse_scaled_series(std::span<const std::string> entries, std::optional<Rational> radius_hint)
{
    if (entries.empty()) {
        throw InvalidArgument("series needs at least one coefficient");
    }
    std::vector<Rational> coeffs;
    std::optional<ScalarKind> kind;
    for (const auto &entry : entries) {
        std::string_view text = entry;
        ScalarKind this_kind = ScalarKind::rational;
        Rational value;
        if (text == "e") {
            this_kind = ScalarKind::e_multiple;
            value = 1;
        } else if (text == "-e") {
            this_kind = ScalarKind::e_multiple;
            value = -1;
        } else if (text.ends_with("*e")) {
            this_kind = ScalarKind::e_multiple;
            value = Rational::parse(text.substr(0, text.size() - 2));
        } else {
            value = Rational::parse(text);
        }
        const bool neutral = value.is_zero();
        if (!neutral) {
            if (kind && *kind != this_kind) {
                throw InvalidArgument("series mixes rational and e-multiple coefficients");
            }
            kind = this_kind;
        }
        coeffs.push_back(std::move(value));
    }
    return ScaledSeries{SeriesPoly(std::move(coeffs), std::move(radius_hint)), kind.value_or(ScalarKind::rational)};
}

ScaledSeries e_scaled_series(std::size_t order)
{
    return ScaledSeries{oracle_e_coeffs(order), ScalarKind::e_multiple};
}

std::vector<Integer> keller_row(unsigned k)
{
    if (k < 2) {
        throw DomainError("Keller rows start at k = 2");
    }
    std::vector<Integer> row;
    row.reserve(k);
    for (unsigned i = 1; i < k; ++i) {
        row.push_back(binomial(k, static_cast<long>(i) - 1));
    }
    row.push_back(binomial(k, static_cast<long>(k) - 1) - 1);
    return row;
}

Rational validity_threshold(const std::optional<Rational> &radius)
{
    if (!radius) {
        return Rational(2);
    }
    const Rational inverse = Rational(1) / *radius;
    return Rational(1) + std::max(Rational(1), inverse);
}

KellerExpansion expand_plain(const ScaledSeries &a, unsigned K)
{
    require_order(a.series, K);
    KellerExpansion out = skeleton(a, Rational(0), K);
    for (unsigned k = 2; k <= K; ++k) {
        out.b.push_back(-row_dot(a.series, k));
    }
    return out;
}

KellerExpansion expand_plain(const SeriesPoly &a, unsigned K)
{
    return expand_plain(ScaledSeries{a, ScalarKind::rational}, K);
}

KellerExpansion expand_shifted(const ScaledSeries &a, const Rational &c, unsigned K)
{
    require_order(a.series, K);
    KellerExpansion out = skeleton(a, c, K);
    for (unsigned k = 2; k <= K; ++k) {
        Rational shifted;
        for (unsigned i = 1; i < k; ++i) {
            shifted += Rational(binomial(k - 1, static_cast<long>(i) - 1)) * a.series[i];
        }
        out.b.push_back(c * shifted - row_dot(a.series, k));
    }
    return out;
}

KellerExpansion expand_shifted(const SeriesPoly &a, const Rational &c, unsigned K)
{
    return expand_shifted(ScaledSeries{a, ScalarKind::rational}, c, K);
}

FloatInterval expansion_eval(const KellerExpansion &expansion, const Rational &y, mpfr_prec_t precision_bits)
{
    const Rational z = y + expansion.shift;
    require_valid(expansion, y > expansion.validity_lower_y, z > expansion.validity_lower_y);

    const Rational t = Rational(1) / z;
    Rational sum;
    // Horner in t = 1/z over b_K .. b_2, then times t^2.
    for (auto it = expansion.b.rbegin(); it != expansion.b.rend(); ++it) {
        sum = (sum + *it) * t;
    }
    sum = expansion.a0 + sum * t;

    if (expansion.kind == ScalarKind::rational) {
        return FloatInterval::from_rational(sum, precision_bits);
    }
    const mpfr_prec_t work = precision_bits + 32;
    return (FloatInterval::from_rational(sum, work) * enclose_constant_e(work)).rounded(precision_bits);
}

FloatInterval expansion_eval(const KellerExpansion &expansion, const FloatInterval &y, mpfr_prec_t precision_bits)
{
    const mpfr_prec_t work = precision_bits + 32;
    const FloatInterval threshold = FloatInterval::from_rational(expansion.validity_lower_y, work);
    const FloatInterval z = y + FloatInterval::from_rational(expansion.shift, work);
    require_valid(expansion, mpfr_greater_p(y.lo(), threshold.hi()) != 0,
                  mpfr_greater_p(z.lo(), threshold.hi()) != 0);

    const FloatInterval t = FloatInterval::from_rational(Rational(1), work) / z;
    FloatInterval sum(work);
    for (auto it = expansion.b.rbegin(); it != expansion.b.rend(); ++it) {
        sum = (sum + FloatInterval::from_rational(*it, work)) * t;
    }
    sum = FloatInterval::from_rational(expansion.a0, work) + sum * t;
    if (expansion.kind == ScalarKind::e_multiple) {
        sum = sum * enclose_constant_e(work);
    }
    return sum.rounded(precision_bits);
}

Rational keller_limit(const SeriesPoly &a)
{
    return a[0];
}

FloatInterval direct_difference(const ScaledSeries &a, const Rational &y, const Rational &c,
                                mpfr_prec_t precision_bits)
{
    const SeriesPoly &series = a.series;
    const GFunction g = [&series](const Rational &z, mpfr_prec_t bits) {
        if (z.is_zero()) {
            throw DomainError("G(y) is undefined at y = 0");
        }
        const FloatInterval t = FloatInterval::from_rational(Rational(1) / z, bits);
        FloatInterval sum(bits);
        for (std::size_t k = series.order() + 1; k-- > 0;) {
            sum = sum * t + FloatInterval::from_rational(series[k], bits);
        }
        return sum;
    };
    const FloatInterval value = keller_difference(g, y, c, precision_bits + 32);
    if (a.kind == ScalarKind::rational) {
        return value.rounded(precision_bits);
    }
    return (value * enclose_constant_e(precision_bits + 32)).rounded(precision_bits);
}

std::string KellerExpansion::to_json() const
{
    nlohmann::ordered_json j;
    j["a0"] = a0.str();
    j["shift"] = shift.str();
    j["K"] = K;
    auto arr = nlohmann::ordered_json::array();
    for (const auto &v : b) {
        arr.push_back(v.str());
    }
    j["b"] = std::move(arr);
    j["scaled_by_e"] = kind == ScalarKind::e_multiple;
    j["validity_lower_y"] = validity_lower_y.str();
    return j.dump();
}

} // namespace ebound
