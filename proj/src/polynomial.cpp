#include "norlund/polynomial.hpp"

namespace norlund {

Polynomial::Polynomial(std::vector<Rational> ascending)
    : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Natural Polynomial::degree() const {
  return coeffs_.empty() ? 0 : static_cast<Natural>(coeffs_.size() - 1);
}

const Rational& Polynomial::coefficient(Natural k) const {
  static const Rational zero(0);
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (Natural k = p.degree() + 1; k-- > 0;) {
    const Rational& c = p.coefficient(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c << ")";
    if (k == 1) os << "*x";
    if (k > 1) os << "*x^" << k;
    first = false;
  }
  return os;
}

}  // namespace norlund
