#include "norlund/series.hpp"

#include <stdexcept>
#include <string>

namespace norlund {

namespace {

void check_same_order(Natural a, Natural b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string("series ") + op +
                                ": orders differ (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("series: order must be at least 1");
  }
}

TruncatedSeries TruncatedSeries::zero(Natural order) {
  return TruncatedSeries(std::vector<Rational>(order));
}

TruncatedSeries TruncatedSeries::one(Natural order) {
  std::vector<Rational> c(order);
  c[0] = Rational(1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::exponential(const Rational& scale,
                                             Natural order) {
  std::vector<Rational> c(order);
  c[0] = Rational(1);
  for (Natural k = 1; k < order; ++k) {
    c[k] = c[k - 1] * scale / Rational(static_cast<long>(k));
  }
  return TruncatedSeries(std::move(c));
}

const Rational& TruncatedSeries::coeff(Natural k) const {
  if (k >= coeffs_.size()) {
    throw std::out_of_range("series: coefficient " + std::to_string(k) +
                            " beyond order " + std::to_string(order()));
  }
  return coeffs_[k];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
  check_same_order(order(), other.order(), "+");
  std::vector<Rational> c(coeffs_);
  for (Natural k = 0; k < order(); ++k) c[k] += other.coeffs_[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
  check_same_order(order(), other.order(), "-");
  std::vector<Rational> c(coeffs_);
  for (Natural k = 0; k < order(); ++k) c[k] -= other.coeffs_[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  check_same_order(order(), other.order(), "*");
  std::vector<Rational> c(order());
  for (Natural i = 0; i < order(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (Natural j = 0; i + j < order(); ++j) {
      c[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(const Rational& scalar) const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x *= scalar;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0].is_zero()) {
    throw std::domain_error("series inverse: constant term is zero");
  }
  std::vector<Rational> b(order());
  Rational lead = Rational(1) / coeffs_[0];
  b[0] = lead;
  for (Natural n = 1; n < order(); ++n) {
    Rational acc(0);
    for (Natural j = 1; j <= n; ++j) acc += coeffs_[j] * b[n - j];
    b[n] = -lead * acc;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries TruncatedSeries::log() const {
  if (coeffs_[0] != Rational(1)) {
    throw std::domain_error("series log: constant term must be 1");
  }
  std::vector<Rational> l(order());
  for (Natural n = 1; n < order(); ++n) {
    Rational acc(0);
    for (Natural m = 1; m < n; ++m) {
      acc += Rational(static_cast<long>(m)) * l[m] * coeffs_[n - m];
    }
    l[n] = coeffs_[n] - acc / Rational(static_cast<long>(n));
  }
  return TruncatedSeries(std::move(l));
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!coeffs_[0].is_zero()) {
    throw std::domain_error("series exp: constant term must be 0");
  }
  std::vector<Rational> e(order());
  e[0] = Rational(1);
  for (Natural n = 1; n < order(); ++n) {
    Rational acc(0);
    for (Natural m = 1; m <= n; ++m) {
      acc += Rational(static_cast<long>(m)) * coeffs_[m] * e[n - m];
    }
    e[n] = acc / Rational(static_cast<long>(n));
  }
  return TruncatedSeries(std::move(e));
}

TruncatedSeries TruncatedSeries::pow(const Rational& exponent) const {
  if (coeffs_[0] != Rational(1)) {
    throw std::domain_error("series pow: constant term must be 1");
  }
  return (log() * exponent).exp();
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  check_same_order(order(), inner.order(), "compose");
  if (!inner.coeffs_[0].is_zero()) {
    throw std::domain_error("series compose: inner constant term must be 0");
  }
  TruncatedSeries acc = zero(order());
  for (Natural k = order(); k-- > 0;) {
    acc = acc * inner;
    std::vector<Rational> c(order());
    c[0] = coeffs_[k];
    acc = acc + TruncatedSeries(std::move(c));
  }
  return acc;
}

TruncatedSeries bernoulli_kernel_series(const Rational& alpha, Natural order) {
  // (e^t - 1)/t has coefficients 1/(k+1)!.
  std::vector<Rational> d(order);
  Rational f(1);
  for (Natural k = 0; k < order; ++k) {
    f = f / Rational(static_cast<long>(k + 1));
    d[k] = f;
  }
  return TruncatedSeries(std::move(d)).inverse().pow(alpha);
}

TruncatedSeries euler_kernel_series(const Rational& alpha, Natural order) {
  // (e^t + 1)/2 has constant term 1 and higher coefficients 1/(2 k!).
  std::vector<Rational> d(order);
  d[0] = Rational(1);
  Rational f(1);
  for (Natural k = 1; k < order; ++k) {
    f = f / Rational(static_cast<long>(k));
    d[k] = f / Rational(2);
  }
  return TruncatedSeries(std::move(d)).inverse().pow(alpha);
}

namespace {

void check_order(Natural n, Natural order, const char* what) {
  if (order <= n) {
    throw std::invalid_argument(std::string(what) + ": order " +
                                std::to_string(order) +
                                " does not reach coefficient " +
                                std::to_string(n));
  }
}

}  // namespace

Rational bernoulli_from_series(Natural n, const Rational& alpha,
                               const Rational& x, Natural order) {
  check_order(n, order, "bernoulli_from_series");
  TruncatedSeries gf =
      bernoulli_kernel_series(alpha, order) *
      TruncatedSeries::exponential(x, order);
  return gf.coeff(n) * factorial(n);
}

Rational bernoulli_from_series(Natural n, const Rational& alpha,
                               const Rational& x) {
  return bernoulli_from_series(n, alpha, x, n + 2);
}

Rational euler_from_series(Natural n, const Rational& alpha, const Rational& x,
                           Natural order) {
  check_order(n, order, "euler_from_series");
  TruncatedSeries gf =
      euler_kernel_series(alpha, order) * TruncatedSeries::exponential(x, order);
  return gf.coeff(n) * factorial(n);
}

Rational euler_from_series(Natural n, const Rational& alpha, const Rational& x) {
  return euler_from_series(n, alpha, x, n + 2);
}

}  // namespace norlund
