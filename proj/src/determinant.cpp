#include "norlund/determinant.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "norlund/closed_forms.hpp"
#include "norlund/stirling.hpp"

namespace norlund {

SqMatrix::SqMatrix(Natural dim) : dim_(dim), cells_(std::size_t(dim) * dim) {
  if (dim == 0) throw std::invalid_argument("SqMatrix: dimension must be >= 1");
}

Rational& SqMatrix::at(Natural row, Natural col) {
  if (row >= dim_ || col >= dim_) {
    throw std::out_of_range("SqMatrix: index out of range");
  }
  return cells_[std::size_t(row) * dim_ + col];
}

const Rational& SqMatrix::at(Natural row, Natural col) const {
  if (row >= dim_ || col >= dim_) {
    throw std::out_of_range("SqMatrix: index out of range");
  }
  return cells_[std::size_t(row) * dim_ + col];
}

Rational det_exact(const SqMatrix& m) {
  const Natural n = m.dim();

  // Clear denominators row by row; det(m) = det(integer matrix) / prod of
  // the row multipliers.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale(1);
  for (Natural r = 0; r < n; ++r) {
    mpz_class row_lcm(1);
    for (Natural c = 0; c < n; ++c) {
      row_lcm = lcm(row_lcm, m.at(r, c).denominator());
    }
    for (Natural c = 0; c < n; ++c) {
      const Rational& cell = m.at(r, c);
      mpz_class q = row_lcm / cell.denominator();
      a[r][c] = cell.numerator() * q;
    }
    scale *= row_lcm;
  }

  // Bareiss elimination. Every division below is exact; prev holds the
  // previous pivot.
  int sign = 1;
  mpz_class prev(1);
  for (Natural k = 0; k + 1 < n; ++k) {
    Natural pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (Natural i = k + 1; i < n; ++i) {
      for (Natural j = k + 1; j < n; ++j) {
        mpz_class num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  mpz_class det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

namespace {

Rational laplace(const SqMatrix& m) {
  const Natural n = m.dim();
  if (n == 1) return m.at(0, 0);
  Rational total(0);
  for (Natural c = 0; c < n; ++c) {
    if (m.at(0, c).is_zero()) continue;
    SqMatrix minor(n - 1);
    for (Natural r = 1; r < n; ++r) {
      Natural cc = 0;
      for (Natural col = 0; col < n; ++col) {
        if (col == c) continue;
        minor.at(r - 1, cc++) = m.at(r, col);
      }
    }
    Rational term = m.at(0, c) * laplace(minor);
    if (c % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

}  // namespace

Rational det_minor_oracle(const SqMatrix& m) {
  if (m.dim() > 9) {
    throw std::invalid_argument("det_minor_oracle: dimension " +
                                std::to_string(m.dim()) + " exceeds 9");
  }
  return laplace(m);
}

Rational quotient_derivative(const JetPair& jets, Natural k) {
  if (jets.p_derivs.size() != jets.q_derivs.size()) {
    throw std::invalid_argument("quotient_derivative: jet lengths differ");
  }
  if (jets.p_derivs.size() < std::size_t(k) + 1) {
    throw std::invalid_argument("quotient_derivative: jets too short for k=" +
                                std::to_string(k));
  }
  if (jets.q_derivs[0].is_zero()) {
    throw std::domain_error("quotient_derivative: q(0) is zero");
  }

  SqMatrix w(k + 1);
  for (Natural r = 0; r <= k; ++r) {
    w.at(r, 0) = jets.p_derivs[r];
    for (Natural c = 1; c <= k; ++c) {
      if (r + 1 >= c) {
        w.at(r, c) = binomial(r, c - 1) * jets.q_derivs[r + 1 - c];
      }
    }
  }

  Rational result = det_exact(w) / pow(jets.q_derivs[0], static_cast<long>(k) + 1);
  if (k % 2 == 1) result = -result;
  return result;
}

std::vector<Rational> bernoulli_kernel_jet(const Rational& alpha, Natural len) {
  if (len == 0) throw std::invalid_argument("kernel jet: length must be >= 1");
  StirlingTable table(2 * (len - 1));
  std::vector<Rational> jet(len);
  for (Natural i = 0; i < len; ++i) {
    jet[i] = bernoulli_kernel_derivative(i, alpha, table);
  }
  return jet;
}

std::vector<Rational> euler_kernel_jet(const Rational& alpha, Natural len) {
  if (len == 0) throw std::invalid_argument("kernel jet: length must be >= 1");
  StirlingTable table(len - 1);
  std::vector<Rational> jet(len);
  for (Natural i = 0; i < len; ++i) {
    jet[i] = euler_kernel_derivative(i, alpha, table);
  }
  return jet;
}

namespace {

std::vector<Rational> power_jet(const Rational& x, Natural len) {
  std::vector<Rational> jet(len);
  jet[0] = Rational(1);
  for (Natural i = 1; i < len; ++i) jet[i] = jet[i - 1] * x;
  return jet;
}

}  // namespace

Rational bernoulli_from_determinant(Natural n, const Rational& alpha,
                                    const Rational& x) {
  if (n == 0) return Rational(1);
  JetPair jets{power_jet(x, n + 1), bernoulli_kernel_jet(alpha, n + 1)};
  return quotient_derivative(jets, n);
}

Rational euler_from_determinant(Natural n, const Rational& alpha,
                                const Rational& x) {
  if (n == 0) return Rational(1);
  JetPair jets{power_jet(x, n + 1), euler_kernel_jet(alpha, n + 1)};
  return quotient_derivative(jets, n);
}

}  // namespace norlund
