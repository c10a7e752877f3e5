#pragma once

#include <vector>

#include "norlund/rational.hpp"

namespace norlund {

/// Formal power series in t over the rationals, truncated to a fixed number
/// of coefficients. A series of order m stores [t^0] .. [t^{m-1}] exactly;
/// order is always at least 1. Binary operations require matching orders,
/// keeping every intermediate result honest about how many coefficients it
/// actually knows.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries zero(Natural order);
  static TruncatedSeries one(Natural order);
  /// exp(scale * t) truncated to the given order.
  static TruncatedSeries exponential(const Rational& scale, Natural order);

  Natural order() const { return static_cast<Natural>(coeffs_.size()); }
  const Rational& coeff(Natural k) const;

  TruncatedSeries operator+(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  TruncatedSeries operator*(const Rational& scalar) const;

  /// Multiplicative inverse; the constant term must be nonzero.
  TruncatedSeries inverse() const;
  /// log of a series with constant term 1.
  TruncatedSeries log() const;
  /// exp of a series with constant term 0.
  TruncatedSeries exp() const;
  /// Power with arbitrary rational exponent, via exp(r * log). The constant
  /// term must be 1.
  TruncatedSeries pow(const Rational& exponent) const;
  /// Substitution f(inner(t)); inner must have zero constant term and the
  /// same order.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// (t / (e^t - 1))^alpha, the generating kernel of the higher-order
/// Bernoulli polynomials.
TruncatedSeries bernoulli_kernel_series(const Rational& alpha, Natural order);

/// (2 / (e^t + 1))^alpha, the generating kernel of the higher-order Euler
/// polynomials.
TruncatedSeries euler_kernel_series(const Rational& alpha, Natural order);

/// n! [t^n] (t/(e^t-1))^alpha e^{xt}. The truncation order must exceed n.
Rational bernoulli_from_series(Natural n, const Rational& alpha,
                               const Rational& x, Natural order);
Rational bernoulli_from_series(Natural n, const Rational& alpha,
                               const Rational& x);

/// n! [t^n] (2/(e^t+1))^alpha e^{xt}. The truncation order must exceed n.
Rational euler_from_series(Natural n, const Rational& alpha, const Rational& x,
                           Natural order);
Rational euler_from_series(Natural n, const Rational& alpha, const Rational& x);

}  // namespace norlund
