#pragma once

#include <vector>

#include "norlund/rational.hpp"

namespace norlund {

/// Arguments x_1, x_2, ... of a partial Bell polynomial; xs[i-1] holds x_i.
/// Evaluating B_{n,k} needs at least x_1 .. x_{n-k+1} when n >= k >= 1.
using BellArgs = std::vector<Rational>;

/// B_{n,k}(x_1, ..., x_{n-k+1}) by the binomial recurrence
/// B_{n,k} = sum_i C(n-1, i-1) x_i B_{n-i, k-1}. Zero when k > n.
/// Throws std::invalid_argument when xs is too short.
Rational bell_partial(Natural n, Natural k, const BellArgs& xs);

/// The same value by direct enumeration of the defining sum over all
/// (l_1, ..., l_n) with sum(i*l_i) = n and sum(l_i) = k. Exponential in n;
/// kept as an independent cross-check for the recurrence.
Rational bell_partial_enum(Natural n, Natural k, const BellArgs& xs);

/// B_{n,k}(1/2, 1/3, ..., 1/(n-k+2)) evaluated by the alternating
/// Stirling-number sum. Requires n >= k >= 1.
Rational bell_harmonic(Natural n, Natural k);

}  // namespace norlund
