#include "norlund/closed_forms.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace norlund {

namespace {

void check_table(const StirlingTable& table, Natural needed, const char* what) {
  if (table.max_n() < needed) {
    throw std::invalid_argument(std::string(what) + ": table covers n <= " +
                                std::to_string(table.max_n()) + ", need " +
                                std::to_string(needed));
  }
}

}  // namespace

Rational bernoulli_kernel_derivative(Natural k, const Rational& a,
                                     const StirlingTable& table) {
  check_table(table, 2 * k, "bernoulli_kernel_derivative");
  Rational outer(0);
  Rational falling(1);
  for (Natural i = 0; i <= k; ++i) {
    if (i > 0) falling *= a - Rational(static_cast<long>(i - 1));
    if (!falling.is_zero()) {
      Rational inner(0);
      for (Natural j = 0; j <= i; ++j) {
        Rational term = binomial(k + i, i - j) * table.at(k + j, j);
        if ((i - j) % 2 == 1) term = -term;
        inner += term;
      }
      outer += falling * inner * (factorial(k) / factorial(k + i));
    }
  }
  return outer;
}

Rational bernoulli_kernel_derivative(Natural k, const Rational& a) {
  return bernoulli_kernel_derivative(k, a, StirlingTable(2 * k));
}

Rational euler_kernel_derivative(Natural k, const Rational& a,
                                 const StirlingTable& table) {
  check_table(table, k, "euler_kernel_derivative");
  Rational sum(0);
  Rational falling(1);
  Rational half_power(1);
  for (Natural i = 0; i <= k; ++i) {
    if (i > 0) {
      falling *= a - Rational(static_cast<long>(i - 1));
      half_power /= Rational(2);
    }
    sum += falling * table.at(k, i) * half_power;
  }
  return sum;
}

Rational euler_kernel_derivative(Natural k, const Rational& a) {
  return euler_kernel_derivative(k, a, StirlingTable(k));
}

Polynomial bernoulli_polynomial(Natural n, const Rational& alpha) {
  StirlingTable table(2 * n);
  std::vector<Rational> coeffs(n + 1);
  for (Natural k = 0; k <= n; ++k) {
    coeffs[n - k] =
        binomial(n, k) * bernoulli_kernel_derivative(k, -alpha, table);
  }
  return Polynomial(std::move(coeffs));
}

Rational bernoulli_number(Natural n, const Rational& alpha) {
  return bernoulli_kernel_derivative(n, -alpha);
}

Rational classical_bernoulli_number(Natural n) {
  StirlingTable table(2 * n);
  Rational sum(0);
  for (Natural j = 0; j <= n; ++j) {
    Rational term = binomial(n + 1, j + 1) * table.at(n + j, j) /
                    binomial(n + j, j);
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Polynomial euler_polynomial(Natural n, const Rational& alpha) {
  StirlingTable table(n);
  std::vector<Rational> coeffs(n + 1);
  for (Natural k = 0; k <= n; ++k) {
    coeffs[n - k] =
        binomial(n, k) * euler_kernel_derivative(k, -alpha, table);
  }
  return Polynomial(std::move(coeffs));
}

Rational euler_number(Natural n, const Rational& alpha) {
  StirlingTable table(n);
  Rational outer(0);
  for (Natural k = 0; k <= n; ++k) {
    Rational inner(0);
    Rational falling(1);
    Rational two_power = pow(Rational(2), static_cast<long>(k));
    for (Natural i = 0; i <= k; ++i) {
      if (i > 0) {
        falling *= -alpha - Rational(static_cast<long>(i - 1));
        two_power /= Rational(2);
      }
      inner += falling * table.at(k, i) * two_power;
    }
    outer += binomial(n, k) * inner;
  }
  return outer;
}

}  // namespace norlund
