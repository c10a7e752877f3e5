#include "norlund/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace norlund {

namespace {

mpq_class canonical(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(long num, long den) : v_(canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(canonical(num, den)) {}

Rational Rational::from_string(const std::string& text) {
    const auto malformed = [&text]() -> void {
        throw std::invalid_argument("Rational: malformed literal \"" + text + "\"");
    };

    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-')
        ++pos;
    const std::size_t num_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
        ++pos;
    if (pos == num_begin)
        malformed();

    std::string den_text = "1";
    if (pos < text.size()) {
        if (text[pos] != '/')
            malformed();
        const std::size_t den_begin = ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            ++pos;
        if (pos == den_begin || pos != text.size())
            malformed();
        den_text = text.substr(den_begin);
    }

    const mpz_class num(text.substr(0, text.find('/')));
    const mpz_class den(den_text);
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator in \"" + text + "\"");
    return Rational(num, den);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    r.v_ = v_ + o.v_;
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    r.v_ = v_ - o.v_;
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    r.v_ = v_ * o.v_;
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    Rational r;
    r.v_ = v_ / o.v_;
    return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    const int c = cmp(v_, o.v_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long exponent) {
    if (exponent == 0)
        return Rational(1);
    if (base.is_zero()) {
        if (exponent < 0)
            throw std::domain_error("Rational: zero to a negative power");
        return Rational(0);
    }
    const unsigned long magnitude =
        exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1UL
                     : static_cast<unsigned long>(exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), magnitude);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), magnitude);
    return exponent < 0 ? Rational(den, num) : Rational(num, den);
}

Rational factorial(Natural n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(Natural n, Natural k) {
    if (k > n)
        return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Rational falling_factorial(const Rational& x, Natural n) {
    Rational product(1);
    for (Natural k = 0; k < n; ++k)
        product *= x - Rational(static_cast<long>(k));
    return product;
}

}  // namespace norlund
