#include "ebound/ebound.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ebound/coeffs.hpp"
#include "ebound/combinatorics.hpp"
#include "ebound/enclosure.hpp"
#include "ebound/error.hpp"
#include "ebound/highprec.hpp"
#include "ebound/keller.hpp"
#include "ebound/power_series.hpp"
#include "ebound/verify.hpp"

struct eb_interval {
    ebound::FloatInterval value;
};

struct eb_series {
    ebound::ScaledSeries value;
};

struct eb_bound_report {
    ebound::BoundReport value;
};

struct eb_keller {
    ebound::KellerExpansion value;
};

namespace {

using namespace ebound;

thread_local std::string last_error;

class LimitExceeded : public Error {
public:
    using Error::Error;
};

class NullArgument : public Error {
public:
    using Error::Error;
};

template <typename F>
eb_status guarded(F &&body)
{
    try {
        body();
        last_error.clear();
        return EB_OK;
    } catch (const LimitExceeded &ex) {
        last_error = ex.what();
        return EB_ERR_LIMIT;
    } catch (const NullArgument &ex) {
        last_error = ex.what();
        return EB_ERR_INVALID_ARGUMENT;
    } catch (const ParseError &ex) {
        last_error = ex.what();
        return EB_ERR_PARSE;
    } catch (const DomainError &ex) {
        last_error = ex.what();
        return EB_ERR_DOMAIN;
    } catch (const InvalidArgument &ex) {
        last_error = ex.what();
        return EB_ERR_INVALID_ARGUMENT;
    } catch (const ComputationError &ex) {
        last_error = ex.what();
        return EB_ERR_COMPUTATION;
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return EB_ERR_INTERNAL;
    } catch (const std::exception &ex) {
        last_error = ex.what();
        return EB_ERR_INTERNAL;
    }
}

template <typename T>
void require_non_null(const T *p, const char *name)
{
    if (p == nullptr) {
        throw NullArgument(std::string(name) + " must not be NULL");
    }
}

char *duplicate(const std::string &s)
{
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void check_order(unsigned n)
{
    if (n > EB_MAX_COEFF_ORDER) {
        throw LimitExceeded("coefficient order " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(EB_MAX_COEFF_ORDER));
    }
}

void check_keller_order(unsigned k)
{
    if (k > EB_MAX_KELLER_ORDER) {
        throw LimitExceeded("expansion order " + std::to_string(k) + " exceeds the cap of " +
                            std::to_string(EB_MAX_KELLER_ORDER));
    }
}

mpfr_prec_t check_precision(unsigned bits)
{
    if (bits < EB_MIN_PRECISION_BITS || bits > EB_MAX_PRECISION_BITS) {
        throw LimitExceeded("precision " + std::to_string(bits) + " bits is outside the supported range [" +
                            std::to_string(EB_MIN_PRECISION_BITS) + ", " +
                            std::to_string(EB_MAX_PRECISION_BITS) + "]");
    }
    return static_cast<mpfr_prec_t>(bits);
}

void check_digits(int digits)
{
    if (digits < 1 || static_cast<unsigned>(digits) > EB_MAX_DIGITS) {
        throw LimitExceeded("digits must lie in [1, " + std::to_string(EB_MAX_DIGITS) + "]");
    }
}

Rational parse_arg(const char *text, const char *name)
{
    require_non_null(text, name);
    return Rational::parse(text);
}

eb_interval *wrap(FloatInterval value)
{
    return new eb_interval{std::move(value)};
}

} // namespace

extern "C" {

const char *eb_version(void)
{
    return "1.0.0";
}

const char *eb_status_name(eb_status status)
{
    switch (status) {
    case EB_OK: return "ok";
    case EB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EB_ERR_PARSE: return "parse error";
    case EB_ERR_DOMAIN: return "domain error";
    case EB_ERR_COMPUTATION: return "computation error";
    case EB_ERR_LIMIT: return "limit exceeded";
    case EB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *eb_last_error(void)
{
    return last_error.c_str();
}

void eb_string_free(char *s)
{
    std::free(s);
}

eb_status eb_rational_canonical(const char *text, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        *out = duplicate(parse_arg(text, "text").str());
    });
}

eb_status eb_stirling1(unsigned p, long q, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        if (p > 2 * EB_MAX_COEFF_ORDER) {
            throw LimitExceeded("Stirling row " + std::to_string(p) + " exceeds the cap of " +
                                std::to_string(2 * EB_MAX_COEFF_ORDER));
        }
        *out = duplicate(stirling1(p, q).get_str());
    });
}

eb_status eb_factorial(unsigned n, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        *out = duplicate(factorial(n).get_str());
    });
}

eb_status eb_binomial(unsigned n, long k, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        *out = duplicate(binomial(n, k).get_str());
    });
}

eb_status eb_e_coeff(unsigned n, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        check_order(n);
        *out = duplicate(e_closed_form(n).str());
    });
}

eb_status eb_f_coeff(unsigned n, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        check_order(n);
        *out = duplicate(f_coeff(n).str());
    });
}

eb_status eb_coeffs_json(unsigned n_max, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        check_order(n_max);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &rec : coefficient_table(n_max)) {
            arr.push_back(rec.e.str());
        }
        *out = duplicate(arr.dump());
    });
}

eb_status eb_coeffs_csv(unsigned n_max, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        check_order(n_max);
        std::ostringstream csv;
        csv << "n,e_n,f_n\n";
        for (const auto &rec : coefficient_table(n_max)) {
            csv << rec.n << ',' << rec.e.str() << ',' << rec.f.str() << '\n';
        }
        *out = duplicate(csv.str());
    });
}

eb_status eb_export_bfile(unsigned n_max, eb_bfile_column which, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        check_order(n_max);
        if (which != EB_BFILE_NUMERATORS && which != EB_BFILE_DENOMINATORS) {
            throw InvalidArgument("unknown b-file column");
        }
        *out = duplicate(export_bfile(
            n_max, which == EB_BFILE_NUMERATORS ? BFileColumn::numerators : BFileColumn::denominators));
    });
}

eb_status eb_f_limit_probe_json(unsigned n_max, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        check_order(n_max);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &[n, value] : f_limit_probe(n_max)) {
            arr.push_back(nlohmann::json::array({n, value}));
        }
        *out = duplicate(arr.dump());
    });
}

eb_status eb_e_series_numeric(unsigned n, unsigned digits, unsigned precision_bits, eb_interval **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        check_order(n);
        if (digits == 0 || digits > EB_MAX_DIGITS) {
            throw LimitExceeded("digits must lie in [1, " + std::to_string(EB_MAX_DIGITS) + "]");
        }
        const mpfr_prec_t bits = precision_bits == 0 ? 0 : check_precision(precision_bits);
        *out = wrap(e_series_numeric(n, digits, bits));
    });
}

eb_status eb_f_gap(unsigned n, unsigned terms, unsigned precision_bits, eb_interval **numeric, char **exact)
{
    return guarded([&] {
        require_non_null(numeric, "numeric");
        require_non_null(exact, "exact");
        check_order(n);
        if (terms > EB_MAX_SERIES_TERMS) {
            throw LimitExceeded("term count exceeds the cap of " + std::to_string(EB_MAX_SERIES_TERMS));
        }
        GapReport gap = f_monotonicity_gap(n, terms, check_precision(precision_bits));
        std::string exact_text = gap.exact.str();
        *numeric = wrap(std::move(gap.numeric));
        *exact = duplicate(exact_text);
    });
}

void eb_interval_free(eb_interval *interval)
{
    delete interval;
}

unsigned eb_interval_precision(const eb_interval *interval)
{
    return interval == nullptr ? 0u : static_cast<unsigned>(interval->value.precision());
}

eb_status eb_interval_bounds(const eb_interval *interval, int digits, char **lo, char **hi)
{
    return guarded([&] {
        require_non_null(interval, "interval");
        require_non_null(lo, "lo");
        require_non_null(hi, "hi");
        check_digits(digits);
        std::string lo_text = interval->value.lo_str(digits);
        std::string hi_text = interval->value.hi_str(digits);
        *lo = duplicate(lo_text);
        try {
            *hi = duplicate(hi_text);
        } catch (...) {
            std::free(*lo);
            *lo = nullptr;
            throw;
        }
    });
}

eb_status eb_interval_midpoint(const eb_interval *interval, int digits, char **out)
{
    return guarded([&] {
        require_non_null(interval, "interval");
        require_non_null(out, "out");
        check_digits(digits);
        BigFloat mid(interval->value.precision() + 8);
        mpfr_set_q(mid.get(), interval->value.midpoint().raw().get_mpq_t(), MPFR_RNDN);
        *out = duplicate(format_decimal(mid.get(), digits, MPFR_RNDN));
    });
}

eb_status eb_interval_contains(const eb_interval *interval, const char *rational, int *out)
{
    return guarded([&] {
        require_non_null(interval, "interval");
        require_non_null(out, "out");
        *out = interval->value.contains(parse_arg(rational, "rational")) ? 1 : 0;
    });
}

eb_status eb_constant_e(unsigned precision_bits, eb_interval **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        *out = wrap(enclose_constant_e(check_precision(precision_bits)));
    });
}

eb_status eb_eval_e_of_x(const char *x, unsigned precision_bits, eb_interval **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        const Rational xv = parse_arg(x, "x");
        *out = wrap(eval_e_of_x(xv, check_precision(precision_bits)));
    });
}

eb_status eb_keller_difference(const char *y, const char *c, unsigned precision_bits, eb_interval **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        const Rational yv = parse_arg(y, "y");
        const Rational cv = parse_arg(c, "c");
        *out = wrap(eval_keller_difference(yv, cv, check_precision(precision_bits)));
    });
}

eb_status eb_convergence_probe_csv(const char *c, const char *const *y_values, size_t count,
                                   unsigned precision_bits, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        require_non_null(y_values, "y_values");
        const Rational cv = parse_arg(c, "c");
        std::vector<Rational> ys;
        ys.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            ys.push_back(parse_arg(y_values[i], "y"));
        }
        const auto rows = convergence_probe(cv, ys, check_precision(precision_bits));
        *out = duplicate(probe_to_csv(rows));
    });
}

eb_status eb_partial_sum_multiplier(const char *x, unsigned n, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        const Rational xv = parse_arg(x, "x");
        check_order(n);
        *out = duplicate(partial_sum_multiplier(xv, n).str());
    });
}

eb_status eb_enclose(const char *x, unsigned n, unsigned precision_bits, eb_bound_report **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        const Rational xv = parse_arg(x, "x");
        check_order(n);
        *out = new eb_bound_report{enclose(xv, n, check_precision(precision_bits))};
    });
}

void eb_bound_report_free(eb_bound_report *report)
{
    delete report;
}

eb_sidedness eb_bound_report_sided(const eb_bound_report *report)
{
    if (report == nullptr || report->value.sided == Sidedness::two_sided) {
        return EB_TWO_SIDED;
    }
    return EB_LOWER_ONLY;
}

eb_status eb_bound_report_lower(const eb_bound_report *report, char **out)
{
    return guarded([&] {
        require_non_null(report, "report");
        require_non_null(out, "out");
        *out = report->value.lower ? duplicate(report->value.lower->multiplier.str()) : nullptr;
    });
}

eb_status eb_bound_report_upper(const eb_bound_report *report, char **out)
{
    return guarded([&] {
        require_non_null(report, "report");
        require_non_null(out, "out");
        *out = report->value.upper ? duplicate(report->value.upper->multiplier.str()) : nullptr;
    });
}

eb_status eb_bound_report_numeric(const eb_bound_report *report, eb_interval **out)
{
    return guarded([&] {
        require_non_null(report, "report");
        require_non_null(out, "out");
        *out = wrap(report->value.numeric);
    });
}

eb_status eb_bound_report_json(const eb_bound_report *report, int digits, char **out)
{
    return guarded([&] {
        require_non_null(report, "report");
        require_non_null(out, "out");
        check_digits(digits);
        *out = duplicate(report->value.to_json(digits));
    });
}

eb_status eb_enclosure_defect(const char *x, unsigned n, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        const Rational xv = parse_arg(x, "x");
        check_order(n);
        *out = duplicate(enclosure_defect(xv, n).str());
    });
}

eb_status eb_series_parse(const char *const *coeffs, size_t count, const char *radius_hint, eb_series **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        require_non_null(coeffs, "coeffs");
        if (count > EB_MAX_SERIES_TERMS) {
            throw LimitExceeded("series length exceeds the cap of " + std::to_string(EB_MAX_SERIES_TERMS));
        }
        std::vector<std::string> entries;
        entries.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            require_non_null(coeffs[i], "coefficient");
            entries.emplace_back(coeffs[i]);
        }
        std::optional<Rational> radius;
        if (radius_hint != nullptr) {
            radius = Rational::parse(radius_hint);
        }
        *out = new eb_series{parse_scaled_series(entries, radius)};
    });
}

eb_status eb_series_e(unsigned order, eb_series **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        check_order(order);
        *out = new eb_series{e_scaled_series(order)};
    });
}

eb_status eb_series_oracle(unsigned order, eb_series **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        check_order(order);
        *out = new eb_series{ScaledSeries{oracle_e_coeffs(order), ScalarKind::rational}};
    });
}

void eb_series_free(eb_series *series)
{
    delete series;
}

eb_status eb_series_json(const eb_series *series, char **out)
{
    return guarded([&] {
        require_non_null(series, "series");
        require_non_null(out, "out");
        *out = duplicate(series->value.series.to_json());
    });
}

int eb_series_scaled_by_e(const eb_series *series)
{
    return series != nullptr && series->value.kind == ScalarKind::e_multiple ? 1 : 0;
}

eb_status eb_keller_row_json(unsigned k, char **out)
{
    return guarded([&] {
        require_non_null(out, "out");
        check_keller_order(k);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &v : keller_row(k)) {
            // Values stay below 2^63 within the order cap.
            arr.push_back(std::stoll(v.get_str()));
        }
        *out = duplicate(arr.dump());
    });
}

eb_status eb_keller_expand(const eb_series *series, const char *shift, unsigned K, eb_keller **out)
{
    return guarded([&] {
        require_non_null(series, "series");
        require_non_null(out, "out");
        check_keller_order(K);
        if (shift == nullptr) {
            *out = new eb_keller{expand_plain(series->value, K)};
        } else {
            const Rational c = Rational::parse(shift);
            *out = new eb_keller{expand_shifted(series->value, c, K)};
        }
    });
}

void eb_keller_free(eb_keller *expansion)
{
    delete expansion;
}

eb_status eb_keller_json(const eb_keller *expansion, char **out)
{
    return guarded([&] {
        require_non_null(expansion, "expansion");
        require_non_null(out, "out");
        *out = duplicate(expansion->value.to_json());
    });
}

eb_status eb_keller_eval(const eb_keller *expansion, const char *y, unsigned precision_bits, eb_interval **out)
{
    return guarded([&] {
        require_non_null(expansion, "expansion");
        require_non_null(out, "out");
        const Rational yv = parse_arg(y, "y");
        *out = wrap(expansion_eval(expansion->value, yv, check_precision(precision_bits)));
    });
}

eb_status eb_keller_limit(const eb_series *series, char **out)
{
    return guarded([&] {
        require_non_null(series, "series");
        require_non_null(out, "out");
        *out = duplicate(keller_limit(series->value.series).str());
    });
}

eb_status eb_keller_direct(const eb_series *series, const char *y, const char *c, unsigned precision_bits,
                           eb_interval **out)
{
    return guarded([&] {
        require_non_null(series, "series");
        require_non_null(out, "out");
        const Rational yv = parse_arg(y, "y");
        const Rational cv = parse_arg(c, "c");
        *out = wrap(direct_difference(series->value, yv, cv, check_precision(precision_bits)));
    });
}

eb_status eb_verify_json(unsigned n_max, unsigned precision_bits, char **out, int *all_passed)
{
    return guarded([&] {
        require_non_null(out, "out");
        require_non_null(all_passed, "all_passed");
        check_order(n_max);
        const mpfr_prec_t bits = check_precision(precision_bits);
        const auto checks = run_verification(n_max, bits);
        bool all = true;
        for (const auto &check : checks) {
            all = all && check.passed;
        }
        *out = duplicate(verification_to_json(checks, bits));
        *all_passed = all ? 1 : 0;
    });
}

} // extern "C"
