#ifndef EBOUND_RATIONAL_HPP
#define EBOUND_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ebound {

using Integer = mpz_class;

// Exact signed rational kept in lowest terms with a positive denominator.
//
// Text form: optional leading '-', a decimal integer, then optionally '/'
// and a positive decimal integer ("-7/16", "1"). str() emits the canonical
// form and parse(str()) is the identity.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(const Integer &value) : q_(value) {}
    Rational(const Integer &num, const Integer &den);

    static Rational parse(std::string_view text);

    std::string str() const;

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class &raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    Rational abs() const;

    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    // Throws DomainError on division by zero.
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // x^k for integer k; negative k requires x != 0.
    Rational pow(long k) const;

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace ebound

#endif
