#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "ebound/ebound.h"

namespace {

struct StringFree {
    void operator()(char *s) const { eb_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringFree>;

struct Handles {
    void operator()(eb_interval *p) const { eb_interval_free(p); }
    void operator()(eb_series *p) const { eb_series_free(p); }
    void operator()(eb_keller *p) const { eb_keller_free(p); }
    void operator()(eb_bound_report *p) const { eb_bound_report_free(p); }
};
template <class T> using Owned = std::unique_ptr<T, Handles>;

// Runs a string-returning call and hands back the text, or "" on failure.
template <class F> std::string text_of(F &&call)
{
    char *raw = nullptr;
    const eb_status st = call(&raw);
    OwnedString s(raw);
    REQUIRE_MESSAGE(st == EB_OK, eb_last_error());
    REQUIRE(raw != nullptr);
    return raw;
}

bool contains(const eb_interval *x, const char *q)
{
    int inside = -1;
    REQUIRE(eb_interval_contains(x, q, &inside) == EB_OK);
    return inside == 1;
}

} // namespace

TEST_CASE("status names and version")
{
    CHECK(std::string(eb_version()) == "1.0.0");
    CHECK(std::string(eb_status_name(EB_OK)) == "ok");
    CHECK(std::string(eb_status_name(EB_ERR_DOMAIN)).size() > 0);
    CHECK(std::string(eb_status_name(static_cast<eb_status>(99))).size() > 0);
    eb_string_free(nullptr);
}

TEST_CASE("exact arithmetic")
{
    CHECK(text_of([](char **o) { return eb_rational_canonical("-6/8", o); }) == "-3/4");
    CHECK(text_of([](char **o) { return eb_rational_canonical("\xE2\x88\x92" "2/4", o); }) == "-1/2");
    CHECK(text_of([](char **o) { return eb_stirling1(5, 2, o); }) == "-50");
    CHECK(text_of([](char **o) { return eb_factorial(10, o); }) == "3628800");
    CHECK(text_of([](char **o) { return eb_binomial(6, 3, o); }) == "20");
    CHECK(text_of([](char **o) { return eb_binomial(6, -1, o); }) == "0");

    char *out = nullptr;
    CHECK(eb_rational_canonical("1/0", &out) == EB_ERR_PARSE);
    CHECK(out == nullptr);
    CHECK(std::string(eb_last_error()).size() > 0);
    CHECK(eb_rational_canonical("+1", &out) == EB_ERR_PARSE);
    CHECK(eb_rational_canonical(nullptr, &out) == EB_ERR_INVALID_ARGUMENT);
    CHECK(eb_rational_canonical("1", nullptr) == EB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("coefficients")
{
    CHECK(text_of([](char **o) { return eb_e_coeff(3, o); }) == "-7/16");
    CHECK(text_of([](char **o) { return eb_f_coeff(3, o); }) == "7/16");
    const auto arr = nlohmann::json::parse(text_of([](char **o) { return eb_coeffs_json(4, o); }));
    CHECK(arr == nlohmann::json::array({"1", "-1/2", "11/24", "-7/16", "2447/5760"}));
    CHECK(text_of([](char **o) { return eb_coeffs_csv(2, o); }) == "n,e_n,f_n\n0,1,1\n1,-1/2,1/2\n2,11/24,11/24\n");
    CHECK(text_of([](char **o) { return eb_export_bfile(2, EB_BFILE_NUMERATORS, o); }) == "0 1\n1 1\n2 11\n");
    CHECK(text_of([](char **o) { return eb_export_bfile(2, EB_BFILE_DENOMINATORS, o); }) == "0 1\n1 2\n2 24\n");
    const auto probe = nlohmann::json::parse(text_of([](char **o) { return eb_f_limit_probe_json(2, o); }));
    CHECK(probe == nlohmann::json::parse(R"([[1,"0.5"],[2,"0.458333333333333"]])"));

    char *out = nullptr;
    CHECK(eb_coeffs_json(EB_MAX_COEFF_ORDER + 1, &out) == EB_ERR_LIMIT);
    CHECK(eb_e_coeff(EB_MAX_COEFF_ORDER + 1, &out) == EB_ERR_LIMIT);
    CHECK(eb_f_limit_probe_json(0, &out) == EB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("numeric series and gap")
{
    eb_interval *raw = nullptr;
    REQUIRE(eb_e_series_numeric(2, 30, 0, &raw) == EB_OK);
    Owned<eb_interval> x(raw);
    char *mid = nullptr;
    REQUIRE(eb_interval_midpoint(x.get(), 20, &mid) == EB_OK);
    OwnedString mid_owned(mid);
    CHECK(std::string(mid).rfind("4.5833333333333333333", 0) == 0);

    eb_interval *gap_raw = nullptr;
    char *exact = nullptr;
    REQUIRE(eb_f_gap(1, 80, 256, &gap_raw, &exact) == EB_OK);
    Owned<eb_interval> gap(gap_raw);
    OwnedString exact_owned(exact);
    CHECK(std::string(exact) == "1/24");
    CHECK(eb_interval_precision(gap.get()) == 256);
    CHECK(eb_e_series_numeric(2, EB_MAX_DIGITS + 1, 0, &raw) == EB_ERR_LIMIT);
    CHECK(eb_f_gap(1, EB_MAX_SERIES_TERMS + 1, 256, &gap_raw, &exact) == EB_ERR_LIMIT);
}

TEST_CASE("intervals and e")
{
    eb_interval *raw = nullptr;
    REQUIRE(eb_constant_e(128, &raw) == EB_OK);
    Owned<eb_interval> e(raw);
    CHECK(eb_interval_precision(e.get()) == 128);
    char *lo = nullptr;
    char *hi = nullptr;
    REQUIRE(eb_interval_bounds(e.get(), 25, &lo, &hi) == EB_OK);
    OwnedString lo_owned(lo);
    OwnedString hi_owned(hi);
    CHECK(std::string(lo).rfind("2.71828182845904523536028", 0) == 0);
    CHECK(std::string(hi).rfind("2.71828182845904523536028", 0) == 0);
    CHECK_FALSE(contains(e.get(), "2718281828/1000000000"));

    REQUIRE(eb_eval_e_of_x("1/2", 128, &raw) == EB_OK);
    Owned<eb_interval> v(raw);
    CHECK(contains(v.get(), "9/4"));
    CHECK(eb_eval_e_of_x("-1", 128, &raw) == EB_ERR_DOMAIN);
    CHECK(eb_constant_e(EB_MIN_PRECISION_BITS - 1, &raw) == EB_ERR_LIMIT);
    CHECK(eb_constant_e(EB_MAX_PRECISION_BITS + 1, &raw) == EB_ERR_LIMIT);
    int inside = 0;
    CHECK(eb_interval_contains(v.get(), "x", &inside) == EB_ERR_PARSE);
    CHECK(eb_interval_contains(nullptr, "1", &inside) == EB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("difference and probe")
{
    eb_interval *raw = nullptr;
    REQUIRE(eb_keller_difference("100", "0", 256, &raw) == EB_OK);
    Owned<eb_interval> d(raw);
    CHECK(contains(d.get(), "27182931551/10000000000") == false);
    char *mid = nullptr;
    REQUIRE(eb_interval_midpoint(d.get(), 30, &mid) == EB_OK);
    OwnedString mid_owned(mid);
    CHECK(std::string(mid).rfind("2.71829315510056103916616538703", 0) == 0);
    CHECK(eb_keller_difference("1", "0", 256, &raw) == EB_ERR_DOMAIN);

    const char *ys[] = {"1024", "2048", "4096"};
    const std::string csv = text_of([&](char **o) { return eb_convergence_probe_csv("0", ys, 3, 256, o); });
    CHECK(csv.rfind("y,abs_error,slope\n1.0240000000000000000e+03,", 0) == 0);
    CHECK(csv.find(",nan\n") != std::string::npos);
    char *out = nullptr;
    CHECK(eb_convergence_probe_csv("0", ys, 0, 256, &out) == EB_ERR_INVALID_ARGUMENT);
    const char *backwards[] = {"2048", "1024"};
    CHECK(eb_convergence_probe_csv("0", backwards, 2, 256, &out) == EB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("enclosures")
{
    eb_bound_report *raw = nullptr;
    REQUIRE(eb_enclose("1/2", 2, 256, &raw) == EB_OK);
    Owned<eb_bound_report> r(raw);
    CHECK(eb_bound_report_sided(r.get()) == EB_TWO_SIDED);
    CHECK(text_of([&](char **o) { return eb_bound_report_lower(r.get(), o); }) == "3/4");
    CHECK(text_of([&](char **o) { return eb_bound_report_upper(r.get(), o); }) == "83/96");
    eb_interval *num_raw = nullptr;
    REQUIRE(eb_bound_report_numeric(r.get(), &num_raw) == EB_OK);
    Owned<eb_interval> num(num_raw);
    CHECK(contains(num.get(), "9/4"));
    const auto j = nlohmann::json::parse(text_of([&](char **o) { return eb_bound_report_json(r.get(), 20, o); }));
    CHECK(j["upper_mul"] == "83/96");

    REQUIRE(eb_enclose("-1/2", 3, 256, &raw) == EB_OK);
    Owned<eb_bound_report> neg(raw);
    CHECK(eb_bound_report_sided(neg.get()) == EB_LOWER_ONLY);
    char *upper = reinterpret_cast<char *>(1);
    CHECK(eb_bound_report_upper(neg.get(), &upper) == EB_OK);
    CHECK(upper == nullptr);

    CHECK(text_of([](char **o) { return eb_partial_sum_multiplier("1/2", 3, o); }) == "311/384");
    CHECK(text_of([](char **o) { return eb_enclosure_defect("1/2", 3, o); }) == "7/128");
    CHECK(eb_enclose("1", 2, 256, &raw) == EB_ERR_DOMAIN);
    CHECK(eb_enclose("1/2", 0, 256, &raw) == EB_ERR_INVALID_ARGUMENT);
    CHECK(eb_enclose("1/2", EB_MAX_COEFF_ORDER + 1, 256, &raw) == EB_ERR_LIMIT);
}

TEST_CASE("series and expansions")
{
    eb_series *raw = nullptr;
    REQUIRE(eb_series_e(8, &raw) == EB_OK);
    Owned<eb_series> e(raw);
    CHECK(eb_series_scaled_by_e(e.get()) == 1);
    eb_keller *k_raw = nullptr;
    REQUIRE(eb_keller_expand(e.get(), nullptr, 8, &k_raw) == EB_OK);
    Owned<eb_keller> plain(k_raw);
    const auto j = nlohmann::json::parse(text_of([&](char **o) { return eb_keller_json(plain.get(), o); }));
    CHECK(j["b"] == nlohmann::json::array({"1/24", "0", "11/640", "0", "5525/580608", "0", "1212281/199065600"}));
    CHECK(j["scaled_by_e"] == true);

    REQUIRE(eb_keller_expand(e.get(), "1/2", 4, &k_raw) == EB_OK);
    Owned<eb_keller> shifted(k_raw);
    const auto js = nlohmann::json::parse(text_of([&](char **o) { return eb_keller_json(shifted.get(), o); }));
    CHECK(js["b"] == nlohmann::json::array({"-5/24", "5/24", "-129/640"}));

    eb_interval *v_raw = nullptr;
    REQUIRE(eb_keller_eval(plain.get(), "100", 256, &v_raw) == EB_OK);
    Owned<eb_interval> v(v_raw);
    CHECK(eb_keller_eval(plain.get(), "2", 256, &v_raw) == EB_ERR_DOMAIN);
    CHECK(text_of([&](char **o) { return eb_keller_limit(e.get(), o); }) == "1");

    REQUIRE(eb_keller_direct(e.get(), "100", "0", 256, &v_raw) == EB_OK);
    Owned<eb_interval> direct(v_raw);

    const char *coeffs[] = {"0", "1", "0", "0", "0"};
    REQUIRE(eb_series_parse(coeffs, 5, nullptr, &raw) == EB_OK);
    Owned<eb_series> recip(raw);
    CHECK(eb_series_scaled_by_e(recip.get()) == 0);
    REQUIRE(eb_keller_expand(recip.get(), nullptr, 4, &k_raw) == EB_OK);
    Owned<eb_keller> rk(k_raw);
    const auto jr = nlohmann::json::parse(text_of([&](char **o) { return eb_keller_json(rk.get(), o); }));
    CHECK(jr["b"] == nlohmann::json::array({"-1", "-1", "-1"}));

    const char *mixed[] = {"1/2", "e"};
    CHECK(eb_series_parse(mixed, 2, nullptr, &raw) == EB_ERR_INVALID_ARGUMENT);
    const char *bad[] = {"1/2", "q"};
    CHECK(eb_series_parse(bad, 2, nullptr, &raw) == EB_ERR_PARSE);
    CHECK(eb_series_parse(coeffs, 5, "0", &raw) != EB_OK);
    CHECK(eb_keller_expand(recip.get(), nullptr, 5, &k_raw) == EB_ERR_INVALID_ARGUMENT);
    CHECK(eb_keller_expand(e.get(), nullptr, EB_MAX_KELLER_ORDER + 1, &k_raw) == EB_ERR_LIMIT);

    REQUIRE(eb_series_oracle(4, &raw) == EB_OK);
    Owned<eb_series> oracle(raw);
    const auto jo = nlohmann::json::parse(text_of([&](char **o) { return eb_series_json(oracle.get(), o); }));
    CHECK(jo.dump().find("2447/5760") != std::string::npos);
    CHECK(nlohmann::json::parse(text_of([](char **o) { return eb_keller_row_json(4, o); })) ==
          nlohmann::json::array({1, 4, 6, 3}));
}

TEST_CASE("verification")
{
    char *out = nullptr;
    int all = 0;
    REQUIRE(eb_verify_json(12, 256, &out, &all) == EB_OK);
    OwnedString owned(out);
    CHECK(all == 1);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["all_passed"] == true);
    CHECK(j["checks"].size() >= 8);
}
