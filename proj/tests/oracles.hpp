#pragma once

// Reference values computed from definitional recurrences only. Nothing
// here shares code with the library's closed forms, determinants, or
// series engine, so agreement is meaningful evidence.

#include <random>
#include <vector>

#include "norlund/rational.hpp"

namespace oracles {

using norlund::Natural;
using norlund::Rational;

// B_0..B_nmax from sum_{k=0}^{n} C(n+1, k) B_k = 0 (n >= 1), B_0 = 1.
// This is the convention with B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers(Natural n_max) {
  std::vector<Rational> b(n_max + 1);
  b[0] = Rational(1);
  for (Natural n = 1; n <= n_max; ++n) {
    Rational acc(0);
    for (Natural k = 0; k < n; ++k) {
      acc += norlund::binomial(n + 1, k) * b[k];
    }
    b[n] = -acc / Rational(static_cast<long>(n) + 1);
  }
  return b;
}

// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
inline Rational bernoulli_poly(Natural n, const Rational& x) {
  std::vector<Rational> b = bernoulli_numbers(n);
  Rational sum(0);
  for (Natural k = 0; k <= n; ++k) {
    sum += norlund::binomial(n, k) * b[k] *
           norlund::pow(x, static_cast<long>(n - k));
  }
  return sum;
}

// E_n(x) from the Bernoulli oracle via
// E_n(x) = 2/(n+1) * (B_{n+1}(x) - 2^{n+1} B_{n+1}(x/2)).
inline Rational euler_poly(Natural n, const Rational& x) {
  Rational two_np1 = norlund::pow(Rational(2), static_cast<long>(n) + 1);
  return Rational(2) *
         (bernoulli_poly(n + 1, x) - two_np1 * bernoulli_poly(n + 1, x / Rational(2))) /
         Rational(static_cast<long>(n) + 1);
}

// Integer Euler numbers E_0..E_nmax from sum_{j} C(2k, 2j) E_{2j} = 0
// (k >= 1), E_0 = 1, odd indices zero.
inline std::vector<Rational> euler_numbers(Natural n_max) {
  std::vector<Rational> e(n_max + 1);
  e[0] = Rational(1);
  for (Natural n = 2; n <= n_max; n += 2) {
    Rational acc(0);
    for (Natural j = 0; j < n; j += 2) {
      acc += norlund::binomial(n, j) * e[j];
    }
    e[n] = -acc;
  }
  return e;
}

inline Rational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return Rational(num(rng), den(rng));
}

inline Rational rand_nonzero(std::mt19937_64& rng) {
  for (;;) {
    Rational r = rand_rational(rng);
    if (!r.is_zero()) return r;
  }
}

}  // namespace oracles
