#pragma once

#include "norlund/polynomial.hpp"
#include "norlund/rational.hpp"
#include "norlund/stirling.hpp"

namespace norlund {

/// k-th derivative at t = 0 of ((e^t - 1)/t)^a, as the double Stirling sum
///
///   sum_{i=0..k} <a>_i k!/(k+i)! sum_{j=0..i} (-1)^{i-j} C(k+i, i-j) S(k+j, j)
///
/// where <a>_i is the falling factorial. With a = -alpha this is the
/// higher-order Bernoulli number B_k^(alpha); with a = +alpha it supplies
/// the jet used by the determinantal route. The table must cover 2k.
Rational bernoulli_kernel_derivative(Natural k, const Rational& a,
                                     const StirlingTable& table);
Rational bernoulli_kernel_derivative(Natural k, const Rational& a);

/// k-th derivative at t = 0 of ((e^t + 1)/2)^a:
///
///   sum_{i=0..k} <a>_i S(k, i) / 2^i.
///
/// The table must cover k.
Rational euler_kernel_derivative(Natural k, const Rational& a,
                                 const StirlingTable& table);
Rational euler_kernel_derivative(Natural k, const Rational& a);

/// B_n^(alpha)(x) with the coefficient of x^{n-k} given by
/// C(n,k) * bernoulli_kernel_derivative(k, -alpha).
Polynomial bernoulli_polynomial(Natural n, const Rational& alpha);

/// B_n^(alpha) = B_n^(alpha)(0).
Rational bernoulli_number(Natural n, const Rational& alpha);

/// Ordinary Bernoulli number B_n by the single alternating sum
/// sum_{j=0..n} (-1)^j C(n+1, j+1) S(n+j, j) / C(n+j, j).
Rational classical_bernoulli_number(Natural n);

/// E_n^(alpha)(x) with the coefficient of x^{n-k} given by
/// C(n,k) * euler_kernel_derivative(k, -alpha).
Polynomial euler_polynomial(Natural n, const Rational& alpha);

/// Integer-normalized Euler number E_n^(alpha) = 2^n E_n^(alpha)(1/2),
/// by the double sum
///
///   sum_{k=0..n} C(n,k) sum_{i=0..k} <-alpha>_i S(k, i) 2^{k-i}.
Rational euler_number(Natural n, const Rational& alpha);

}  // namespace norlund
