#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace norlund {

/// Index type used for degrees, orders and summation bounds.
using Natural = unsigned int;

/// Exact rational scalar backed by arbitrary-precision integers.
///
/// Values are always held in lowest terms with a positive denominator;
/// zero is 0/1. Equality is therefore structural. The text form is
/// "p/q" in lowest terms, or "p" alone when the denominator is 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}  // integers embed implicitly
    Rational(long num, long den);
    explicit Rational(const mpz_class& value) : v_(value) {}
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "p/q" or a bare integer literal (optional leading '-').
    /// Throws std::invalid_argument on malformed input or q = 0.
    static Rational from_string(const std::string& text);

    std::string str() const { return v_.get_str(); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws on division by zero

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// base^exponent; negative exponents invert, 0^0 = 1.
/// Throws std::domain_error for 0 raised to a negative power.
Rational pow(const Rational& base, long exponent);

/// n! as an exact integer-valued Rational.
Rational factorial(Natural n);

/// C(n, k); zero when k > n.
Rational binomial(Natural n, Natural k);

/// Falling factorial x(x-1)...(x-n+1); 1 when n = 0.
Rational falling_factorial(const Rational& x, Natural n);

}  // namespace norlund
