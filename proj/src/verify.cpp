#include "ebound/verify.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "ebound/coeffs.hpp"
#include "ebound/combinatorics.hpp"
#include "ebound/enclosure.hpp"
#include "ebound/error.hpp"
#include "ebound/highprec.hpp"
#include "ebound/keller.hpp"
#include "ebound/power_series.hpp"

namespace ebound {

namespace {

CheckResult run_check(const std::string &name, const std::function<std::string()> &body)
{
    try {
        std::string failure = body();
        return {name, failure.empty(), failure.empty() ? "ok" : failure};
    } catch (const std::exception &ex) {
        return {name, false, ex.what()};
    }
}

} // namespace

std::vector<CheckResult> run_verification(unsigned n_max, mpfr_prec_t precision_bits)
{
    std::vector<CheckResult> out;

    out.push_back(run_check("oracle_equivalence", [&]() -> std::string {
        const SeriesPoly oracle = oracle_e_coeffs(n_max);
        for (unsigned n = 0; n <= n_max; ++n) {
            if (e_closed_form(n) != oracle[n]) {
                return "closed form and series oracle differ at n = " + std::to_string(n);
            }
        }
        return {};
    }));

    out.push_back(run_check("f_positive_decreasing", [&]() -> std::string {
        for (unsigned n = 1; n <= n_max; ++n) {
            const Rational f = f_coeff(n);
            const Rational next = f_coeff(n + 1);
            if (!(f > next && next > Rational(0))) {
                return "f_n > f_(n+1) > 0 fails at n = " + std::to_string(n);
            }
        }
        return {};
    }));

    out.push_back(run_check("series_representation", [&]() -> std::string {
        const Rational tolerance = Rational(1) / Rational(Integer(10)).pow(25);
        for (unsigned n = 1; n <= std::min(n_max, 10u); ++n) {
            const FloatInterval numeric = e_series_numeric(n, 30, precision_bits);
            if (!((numeric.midpoint() - e_closed_form(n)).abs() < tolerance)) {
                return "numeric series misses e_n at n = " + std::to_string(n);
            }
        }
        return {};
    }));

    out.push_back(run_check("gap_identity", [&]() -> std::string {
        const Rational tolerance = Rational(1) / Rational(Integer(10)).pow(25);
        for (unsigned n = 1; n <= std::min(n_max, 8u); ++n) {
            const GapReport gap = f_monotonicity_gap(n, 80, precision_bits);
            if (!((gap.numeric.midpoint() - gap.exact).abs() < tolerance)) {
                return "gap series misses f_n - f_(n+1) at n = " + std::to_string(n);
            }
        }
        return {};
    }));

    out.push_back(run_check("stirling_laws", []() -> std::string {
        for (long p = 1; p <= 12; ++p) {
            Integer row_sum = 0;
            for (long q = 1; q <= p; ++q) {
                const Integer s = stirling1(p, q);
                const Integer signed_s = ((p - q) % 2 == 0) ? s : Integer(-s);
                if (signed_s <= 0) {
                    return "sign law fails at (" + std::to_string(p) + ", " + std::to_string(q) + ")";
                }
                row_sum += signed_s;
            }
            if (row_sum != factorial(p)) {
                return "row-sum law fails at p = " + std::to_string(p);
            }
        }
        return {};
    }));

    out.push_back(run_check("partial_sum_orderings", [&]() -> std::string {
        const unsigned max_order = 12;
        for (const Rational &x : {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(9, 10)}) {
            const FloatInterval target = eval_e_of_x(x, precision_bits);
            for (unsigned k = 1; k + 2 <= max_order; k += 2) {
                if (!(partial_sum_multiplier(x, k) < partial_sum_multiplier(x, k + 2))) {
                    return "odd chain fails at x = " + x.str();
                }
            }
            for (unsigned k = 0; k + 2 <= max_order; k += 2) {
                if (!(partial_sum_multiplier(x, k + 2) < partial_sum_multiplier(x, k))) {
                    return "even chain fails at x = " + x.str();
                }
            }
            for (unsigned n = 1; n <= max_order; ++n) {
                if (!enclose(x, n, precision_bits).numeric.strictly_contains(target)) {
                    return "sandwich misses e(x) at x = " + x.str() + ", n = " + std::to_string(n);
                }
            }
        }
        for (const Rational &x : {Rational(-1, 10), Rational(-1, 2), Rational(-9, 10)}) {
            const FloatInterval target = eval_e_of_x(x, precision_bits);
            for (unsigned n = 0; n < max_order; ++n) {
                if (!(partial_sum_multiplier(x, n) < partial_sum_multiplier(x, n + 1))) {
                    return "increasing chain fails at x = " + x.str();
                }
            }
            for (unsigned n = 1; n <= max_order; ++n) {
                const FloatInterval lower = enclose(x, n, precision_bits).numeric;
                if (!mpfr_less_p(lower.lo(), target.lo())) {
                    return "lower bound not below e(x) at x = " + x.str();
                }
            }
        }
        return {};
    }));

    out.push_back(run_check("keller_rows", []() -> std::string {
        for (unsigned k = 2; k <= 12; ++k) {
            const auto row = keller_row(k);
            for (unsigned i = 1; i < k; ++i) {
                if (row[i - 1] != binomial(k, i - 1)) {
                    return "row entry mismatch at k = " + std::to_string(k);
                }
            }
            if (row[k - 1] != Integer(k - 1)) {
                return "last row entry mismatch at k = " + std::to_string(k);
            }
        }
        return {};
    }));

    out.push_back(run_check("keller_limit", [&]() -> std::string {
        const Rational y = Rational(Integer(Integer(1) << 20));
        const FloatInterval e = enclose_constant_e(precision_bits);
        for (const Rational &c : {Rational(-5), Rational(0), Rational(1, 2), Rational(5)}) {
            const Rational b2 = expand_shifted(e_scaled_series(2), c, 2).coefficient(2);
            const FloatInterval diff = abs(eval_keller_difference(y, c, precision_bits) - e);
            // 10 |b2| e / y^2 with e bounded below by 2.
            const Rational bound = Rational(20) * b2.abs() / (y * y);
            if (!(diff.upper_rational() <= bound)) {
                return "difference too far from e at c = " + c.str();
            }
        }
        return {};
    }));

    return out;
}

std::string verification_to_json(const std::vector<CheckResult> &checks, mpfr_prec_t precision_bits)
{
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::array();
    bool all = true;
    for (const auto &check : checks) {
        nlohmann::ordered_json item;
        item["name"] = check.name;
        item["passed"] = check.passed;
        item["detail"] = check.detail;
        arr.push_back(std::move(item));
        all = all && check.passed;
    }
    j["checks"] = std::move(arr);
    j["all_passed"] = all;
    j["precision_bits"] = precision_bits;
    return j.dump();
}

} // namespace ebound
