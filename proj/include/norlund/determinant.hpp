#pragma once

#include <vector>

#include "norlund/rational.hpp"

namespace norlund {

/// Dense square matrix over Rational. Dimension is fixed at construction
/// and at least 1; entries start at zero.
class SqMatrix {
 public:
  explicit SqMatrix(Natural dim);

  Natural dim() const { return dim_; }
  Rational& at(Natural row, Natural col);
  const Rational& at(Natural row, Natural col) const;

 private:
  Natural dim_;
  std::vector<Rational> cells_;
};

/// Determinant by fraction-free Bareiss elimination on the integer matrix
/// obtained by clearing each row's denominators.
Rational det_exact(const SqMatrix& m);

/// Determinant by Laplace expansion along the first row. Factorial cost;
/// refuses matrices larger than 9x9. Cross-check only.
Rational det_minor_oracle(const SqMatrix& m);

/// Derivatives at the origin of a numerator p and denominator q:
/// p_derivs[i] = p^(i)(0), q_derivs[i] = q^(i)(0). Both vectors must have
/// the same length and q_derivs[0] must be nonzero.
struct JetPair {
  std::vector<Rational> p_derivs;
  std::vector<Rational> q_derivs;
};

/// k-th derivative of p/q at the origin, as
///
///   (-1)^k / q(0)^{k+1} * det W,
///
/// where W is (k+1)x(k+1) with W[r][0] = p^(r)(0) and, for c >= 1,
/// W[r][c] = C(r, c-1) q^(r-c+1)(0) (zero when the derivative order would
/// be negative). Requires jets of length at least k+1.
Rational quotient_derivative(const JetPair& jets, Natural k);

/// Derivatives at the origin of ((e^t - 1)/t)^alpha, indices 0 .. len-1.
std::vector<Rational> bernoulli_kernel_jet(const Rational& alpha, Natural len);

/// Derivatives at the origin of ((e^t + 1)/2)^alpha, indices 0 .. len-1.
std::vector<Rational> euler_kernel_jet(const Rational& alpha, Natural len);

/// B_n^(alpha)(x) via the determinantal formula: the quotient derivative of
/// e^{xt} against the Bernoulli kernel jet. n = 0 yields 1 directly.
Rational bernoulli_from_determinant(Natural n, const Rational& alpha,
                                    const Rational& x);

/// E_n^(alpha)(x) via the determinantal formula with the Euler kernel jet.
Rational euler_from_determinant(Natural n, const Rational& alpha,
                                const Rational& x);

}  // namespace norlund
