#include "ebound/rational.hpp"

#include <algorithm>

#include "ebound/error.hpp"

namespace ebound {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// U+2212 MINUS SIGN, accepted as an alternative to '-'.
constexpr std::string_view unicode_minus = "\xE2\x88\x92";

} // namespace

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string original(text);
    bool negative = false;
    if (text.starts_with('-')) {
        negative = true;
        text.remove_prefix(1);
    } else if (text.starts_with(unicode_minus)) {
        negative = true;
        text.remove_prefix(unicode_minus.size());
    }

    std::string_view num_text = text;
    std::string_view den_text;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_text = text.substr(0, slash);
        den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw ParseError("malformed rational '" + original + "'");
        }
    }
    if (!all_digits(num_text)) {
        throw ParseError("malformed rational '" + original + "'");
    }

    Integer num(std::string(num_text), 10);
    Integer den(1);
    if (!den_text.empty()) {
        den = Integer(std::string(den_text), 10);
        if (den == 0) {
            throw ParseError("zero denominator in '" + original + "'");
        }
    }
    if (negative) {
        num = -num;
    }
    return Rational(num, den);
}

std::string Rational::str() const
{
    std::string out = q_.get_num().get_str(10);
    if (q_.get_den() != 1) {
        out += '/';
        out += q_.get_den().get_str(10);
    }
    return out;
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(q_)));
}

Rational &Rational::operator+=(const Rational &rhs)
{
    q_ += rhs.q_;
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs)
{
    q_ -= rhs.q_;
    return *this;
}

Rational &Rational::operator*=(const Rational &rhs)
{
    q_ *= rhs.q_;
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs)
{
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    q_ /= rhs.q_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-q_));
}

Rational Rational::pow(long k) const
{
    if (k < 0) {
        if (is_zero()) {
            throw DomainError("zero raised to a negative power");
        }
        Rational inv = Rational(1) / *this;
        return inv.pow(-k);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(k));
    mpq_class r(num, den);
    return Rational(std::move(r));
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.str();
}

} // namespace ebound
