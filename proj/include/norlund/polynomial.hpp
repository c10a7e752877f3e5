#pragma once

#include <ostream>
#include <vector>

#include "norlund/rational.hpp"

namespace norlund {

/// Dense univariate polynomial over Rational, coefficients stored in
/// ascending order of degree. The representation is normalized: trailing
/// zero coefficients are trimmed, and the zero polynomial stores nothing.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  /// Degree, with the convention that the zero polynomial has degree 0.
  Natural degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^k; zero beyond the stored degree.
  const Rational& coefficient(Natural k) const;

  /// Horner evaluation.
  Rational operator()(const Rational& x) const;

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool operator==(const Polynomial& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace norlund
