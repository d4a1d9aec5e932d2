// ebound-cli: command-line front end over the C API.
//
// Exit codes: 0 success, 1 domain or computation error, 2 usage error
// (bad flags, malformed rationals, requests beyond implementation caps).
// Output is written only after the whole computation has succeeded.

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebound/ebound.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct CliFailure {
    int code;
    std::string message;
};

int exit_code_for(eb_status status)
{
    switch (status) {
    case EB_ERR_PARSE:
    case EB_ERR_LIMIT:
    case EB_ERR_INVALID_ARGUMENT:
        return exit_usage;
    default:
        return exit_failure;
    }
}

void check(eb_status status)
{
    if (status != EB_OK) {
        throw CliFailure{exit_code_for(status), std::string(eb_status_name(status)) + ": " + eb_last_error()};
    }
}

struct StringDeleter {
    void operator()(char *s) const { eb_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::string take(char *s)
{
    OwnedString owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

template <typename T, void (*Free)(T *)>
struct HandleDeleter {
    void operator()(T *p) const { Free(p); }
};
using Interval = std::unique_ptr<eb_interval, HandleDeleter<eb_interval, eb_interval_free>>;
using Series = std::unique_ptr<eb_series, HandleDeleter<eb_series, eb_series_free>>;
using Report = std::unique_ptr<eb_bound_report, HandleDeleter<eb_bound_report, eb_bound_report_free>>;
using Keller = std::unique_ptr<eb_keller, HandleDeleter<eb_keller, eb_keller_free>>;

// Canonical form of a rational argument; rejects malformed text before any
// computation starts.
std::string canonical(const std::string &text, const char *flag)
{
    char *out = nullptr;
    const eb_status status = eb_rational_canonical(text.c_str(), &out);
    if (status != EB_OK) {
        throw CliFailure{exit_usage, std::string("--") + flag + ": " + eb_last_error()};
    }
    return take(out);
}

std::pair<std::string, std::string> bounds(const eb_interval *interval, int digits)
{
    char *lo = nullptr;
    char *hi = nullptr;
    check(eb_interval_bounds(interval, digits, &lo, &hi));
    return {take(lo), take(hi)};
}

std::string midpoint(const eb_interval *interval, int digits)
{
    char *out = nullptr;
    check(eb_interval_midpoint(interval, digits, &out));
    return take(out);
}

std::string with_newline(std::string s)
{
    if (s.empty() || s.back() != '\n') {
        s += '\n';
    }
    return s;
}

// 2^k as a decimal integer string.
std::string power_of_two(int k)
{
    std::string value = "1";
    for (int i = 0; i < k; ++i) {
        int carry = 0;
        for (auto it = value.rbegin(); it != value.rend(); ++it) {
            const int d = (*it - '0') * 2 + carry;
            *it = static_cast<char>('0' + d % 10);
            carry = d / 10;
        }
        if (carry) {
            value.insert(value.begin(), static_cast<char>('0' + carry));
        }
    }
    return value;
}

struct Options {
    unsigned n = 6;
    std::string format = "json";
    std::string which = "numerators";
    bool pretty = false;

    std::string x;
    unsigned order = 1;
    unsigned precision = 256;
    int digits = 30;

    std::string c = "0";
    bool has_c = false;
    std::string y;
    std::vector<std::string> series;
    bool e_series = false;
    std::string radius;
    unsigned row = 0;

    int probe_from = -1;
    int probe_to = -1;
};

std::string run_coeffs(const Options &opt)
{
    char *out = nullptr;
    if (opt.format == "json") {
        check(eb_coeffs_json(opt.n, &out));
        std::string text = take(out);
        if (opt.pretty) {
            text = nlohmann::json::parse(text).dump(2);
        }
        return with_newline(text);
    }
    if (opt.format == "csv") {
        check(eb_coeffs_csv(opt.n, &out));
        return take(out);
    }
    check(eb_export_bfile(opt.n, opt.which == "numerators" ? EB_BFILE_NUMERATORS : EB_BFILE_DENOMINATORS, &out));
    return take(out);
}

std::string run_export(const Options &opt)
{
    char *out = nullptr;
    check(eb_export_bfile(opt.n, opt.which == "numerators" ? EB_BFILE_NUMERATORS : EB_BFILE_DENOMINATORS, &out));
    return take(out);
}

std::string run_enclose(const Options &opt)
{
    const std::string x = canonical(opt.x, "x");
    eb_bound_report *raw = nullptr;
    check(eb_enclose(x.c_str(), opt.order, opt.precision, &raw));
    Report report(raw);
    char *out = nullptr;
    check(eb_bound_report_json(report.get(), opt.digits, &out));
    std::string text = take(out);
    if (opt.pretty) {
        text = nlohmann::ordered_json::parse(text).dump(2);
    }
    return with_newline(text);
}

std::string run_keller(const Options &opt)
{
    char *out = nullptr;
    if (opt.row != 0) {
        check(eb_keller_row_json(opt.row, &out));
        return with_newline(take(out));
    }

    eb_series *raw_series = nullptr;
    if (!opt.series.empty()) {
        std::vector<const char *> ptrs;
        for (const auto &s : opt.series) {
            ptrs.push_back(s.c_str());
        }
        check(eb_series_parse(ptrs.data(), ptrs.size(), opt.radius.empty() ? nullptr : opt.radius.c_str(),
                              &raw_series));
    } else {
        check(eb_series_e(opt.order, &raw_series));
    }
    Series series(raw_series);

    const std::string c = opt.has_c ? canonical(opt.c, "c") : std::string();
    eb_keller *raw_keller = nullptr;
    check(eb_keller_expand(series.get(), opt.has_c ? c.c_str() : nullptr, opt.order, &raw_keller));
    Keller expansion(raw_keller);
    check(eb_keller_json(expansion.get(), &out));
    const std::string expansion_json = take(out);

    if (opt.y.empty()) {
        std::string text = expansion_json;
        if (opt.pretty) {
            text = nlohmann::ordered_json::parse(text).dump(2);
        }
        return with_newline(text);
    }

    const std::string y = canonical(opt.y, "y");
    eb_interval *raw_value = nullptr;
    check(eb_keller_eval(expansion.get(), y.c_str(), opt.precision, &raw_value));
    Interval value(raw_value);
    const auto [lo, hi] = bounds(value.get(), opt.digits);

    nlohmann::ordered_json j;
    j["expansion"] = nlohmann::ordered_json::parse(expansion_json);
    j["y"] = y;
    j["value_lo"] = lo;
    j["value_hi"] = hi;
    j["precision_bits"] = opt.precision;
    j["digits"] = opt.digits;
    return with_newline(opt.pretty ? j.dump(2) : j.dump());
}

std::string run_limit(const Options &opt)
{
    const std::string c = canonical(opt.c, "c");
    if (opt.probe_from >= 0 || opt.probe_to >= 0) {
        if (opt.probe_from < 0 || opt.probe_to < opt.probe_from || opt.probe_to > 1000) {
            throw CliFailure{exit_usage, "--probe-from/--probe-to must satisfy 0 <= from <= to <= 1000"};
        }
        std::vector<std::string> ys;
        for (int k = opt.probe_from; k <= opt.probe_to; ++k) {
            ys.push_back(power_of_two(k));
        }
        std::vector<const char *> ptrs;
        for (const auto &s : ys) {
            ptrs.push_back(s.c_str());
        }
        char *out = nullptr;
        check(eb_convergence_probe_csv(c.c_str(), ptrs.data(), ptrs.size(), opt.precision, &out));
        return take(out);
    }

    if (opt.y.empty()) {
        throw CliFailure{exit_usage, "limit needs --y or --probe-from/--probe-to"};
    }
    const std::string y = canonical(opt.y, "y");
    eb_interval *raw_diff = nullptr;
    check(eb_keller_difference(y.c_str(), c.c_str(), opt.precision, &raw_diff));
    Interval diff(raw_diff);
    eb_interval *raw_e = nullptr;
    check(eb_constant_e(opt.precision, &raw_e));
    Interval e(raw_e);

    const auto [lo, hi] = bounds(diff.get(), opt.digits);
    const auto [e_lo, e_hi] = bounds(e.get(), opt.digits);

    nlohmann::ordered_json j;
    j["y"] = y;
    j["c"] = c;
    j["value"] = midpoint(diff.get(), opt.digits);
    j["value_lo"] = lo;
    j["value_hi"] = hi;
    j["e_lo"] = e_lo;
    j["e_hi"] = e_hi;
    {
        // |midpoint(difference) - midpoint(e)| rendered through the probe.
        const char *ys[] = {y.c_str()};
        char *out = nullptr;
        check(eb_convergence_probe_csv(c.c_str(), ys, 1, opt.precision, &out));
        std::istringstream csv(take(out));
        std::string header;
        std::string row;
        std::getline(csv, header);
        std::getline(csv, row);
        const auto first = row.find(',');
        const auto second = row.find(',', first + 1);
        j["abs_error"] = row.substr(first + 1, second - first - 1);
    }
    j["precision_bits"] = opt.precision;
    j["digits"] = opt.digits;
    return with_newline(opt.pretty ? j.dump(2) : j.dump());
}

std::string run_verify(const Options &opt, int &code)
{
    char *out = nullptr;
    int all_passed = 0;
    check(eb_verify_json(opt.n, opt.precision, &out, &all_passed));
    std::string text = take(out);
    if (opt.pretty) {
        text = nlohmann::ordered_json::parse(text).dump(2);
    }
    code = all_passed ? exit_ok : exit_failure;
    return with_newline(text);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact coefficients, enclosures and Keller-type expansions for (1+x)^(1/x)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(eb_version()));

    Options opt;
    const std::vector<std::string> formats{"json", "csv", "bfile"};
    const std::vector<std::string> columns{"numerators", "denominators"};

    auto *coeffs = app.add_subcommand("coeffs", "Exact e_0..e_n");
    coeffs->add_option("--n", opt.n, "Highest coefficient index")->required();
    coeffs->add_option("--format", opt.format, "json | csv | bfile")->check(CLI::IsMember(formats));
    coeffs->add_option("--which", opt.which, "b-file column: numerators | denominators")
        ->check(CLI::IsMember(columns));
    coeffs->add_flag("--pretty", opt.pretty, "Indented JSON");

    auto *enclose = app.add_subcommand("enclose", "Partial-sum bounds for (1+x)^(1/x)");
    enclose->add_option("--x", opt.x, "Rational x in (-1, 1)")->required();
    enclose->add_option("--order", opt.order, "Partial-sum order n >= 1")->required();
    enclose->add_option("--precision", opt.precision, "Working precision in bits");
    enclose->add_option("--digits", opt.digits, "Significant digits in numeric output");
    enclose->add_flag("--pretty", opt.pretty, "Indented JSON");

    auto *keller = app.add_subcommand("keller", "Keller-type expansion coefficients");
    keller->add_option("--order", opt.order, "Expansion order K >= 2");
    keller->add_option("--c", opt.c, "Shift c (omit for the shift-free form)");
    keller->add_option("--series", opt.series, "Coefficients a_0,a_1,... (default: the e-series)")->delimiter(',');
    keller->add_option("--radius", opt.radius, "Radius of convergence of the series");
    keller->add_option("--y", opt.y, "Evaluate the truncated expansion at y");
    keller->add_option("--row", opt.row, "Print the integer row for 1/y^k instead");
    keller->add_option("--precision", opt.precision, "Working precision in bits");
    keller->add_option("--digits", opt.digits, "Significant digits in numeric output");
    keller->add_flag("--pretty", opt.pretty, "Indented JSON");

    auto *limit = app.add_subcommand("limit", "Evaluate (y+1)(1+1/(y+c))^(y+c) - y(1+1/(y+c-1))^(y+c-1)");
    limit->add_option("--c", opt.c, "Shift c");
    limit->add_option("--y", opt.y, "Abscissa y");
    limit->add_option("--precision", opt.precision, "Working precision in bits");
    limit->add_option("--digits", opt.digits, "Significant digits in numeric output");
    limit->add_option("--probe-from", opt.probe_from, "CSV probe over y = 2^from .. 2^to");
    limit->add_option("--probe-to", opt.probe_to, "CSV probe over y = 2^from .. 2^to");
    limit->add_flag("--pretty", opt.pretty, "Indented JSON");

    auto *verify = app.add_subcommand("verify", "Run the library self-checks");
    verify->add_option("--n", opt.n, "Highest coefficient index checked");
    verify->add_option("--precision", opt.precision, "Working precision in bits");
    verify->add_flag("--pretty", opt.pretty, "Indented JSON");

    auto *exporter = app.add_subcommand("export", "OEIS b-file of numerators or denominators");
    exporter->add_option("--n", opt.n, "Highest index")->required();
    exporter->add_option("--which", opt.which, "numerators | denominators")->check(CLI::IsMember(columns));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return exit_usage;
    }

    opt.has_c = keller->count("--c") > 0;
    if (*keller && opt.row == 0 && keller->count("--order") == 0) {
        std::cerr << "error: keller needs --order or --row\n";
        return exit_usage;
    }

    try {
        std::string output;
        int code = exit_ok;
        if (*coeffs) {
            output = run_coeffs(opt);
        } else if (*enclose) {
            output = run_enclose(opt);
        } else if (*keller) {
            output = run_keller(opt);
        } else if (*limit) {
            output = run_limit(opt);
        } else if (*verify) {
            if (verify->count("--n") == 0) {
                opt.n = 30;
            }
            output = run_verify(opt, code);
        } else if (*exporter) {
            output = run_export(opt);
        }
        std::fwrite(output.data(), 1, output.size(), stdout);
        return code;
    } catch (const CliFailure &failure) {
        std::cerr << "error: " << failure.message << '\n';
        return failure.code;
    }
}
