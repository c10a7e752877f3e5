#include "norlund/bell.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "norlund/stirling.hpp"

namespace norlund {

namespace {

void check_args(Natural n, Natural k, const BellArgs& xs) {
  Natural required = (k >= 1 && k <= n) ? n - k + 1 : 0;
  if (xs.size() < required) {
    throw std::invalid_argument("bell: need " + std::to_string(required) +
                                " arguments, got " + std::to_string(xs.size()));
  }
}

}  // namespace

Rational bell_partial(Natural n, Natural k, const BellArgs& xs) {
  check_args(n, k, xs);
  if (k > n) return Rational(0);
  if (k == 0) return n == 0 ? Rational(1) : Rational(0);

  // Level j holds B_{m,j} for m in [j, n-k+j]; entries outside the band are
  // never read by the level above.
  std::vector<Rational> prev(n + 1), cur(n + 1);
  prev[0] = Rational(1);
  for (Natural j = 1; j <= k; ++j) {
    std::fill(cur.begin(), cur.end(), Rational(0));
    for (Natural m = j; m <= n - k + j; ++m) {
      Rational acc(0);
      for (Natural i = 1; i <= m - j + 1; ++i) {
        acc += binomial(m - 1, i - 1) * xs[i - 1] * prev[m - i];
      }
      cur[m] = acc;
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

namespace {

// Walks multiplicity vectors (l_1, ..., l_n) with sum(i*l_i) = n and
// sum(l_i) = k, accumulating prod (x_i / i!)^{l_i} / l_i! along the way.
void enum_partitions(Natural i, Natural weight_left, Natural parts_left,
                     const BellArgs& xs, const Rational& partial,
                     Rational& total) {
  if (parts_left == 0) {
    if (weight_left == 0) total += partial;
    return;
  }
  if (weight_left < parts_left || i == 0) return;
  // Any index above this cap would leave too little weight for the
  // remaining parts, so its multiplicity is forced to zero.
  Natural cap = weight_left - parts_left + 1;
  if (i > cap) i = cap;
  Rational unit = xs[i - 1] / factorial(i);
  Rational scaled = partial;
  for (Natural l = 0; l * i <= weight_left && l <= parts_left; ++l) {
    if (l > 0) scaled = scaled * unit / Rational(static_cast<long>(l));
    enum_partitions(i - 1, weight_left - l * i, parts_left - l, xs, scaled,
                    total);
  }
}

}  // namespace

Rational bell_partial_enum(Natural n, Natural k, const BellArgs& xs) {
  check_args(n, k, xs);
  if (k > n) return Rational(0);
  if (k == 0) return n == 0 ? Rational(1) : Rational(0);
  Rational total(0);
  enum_partitions(n, n, k, xs, Rational(1), total);
  return total * factorial(n);
}

Rational bell_harmonic(Natural n, Natural k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("bell_harmonic: requires n >= k >= 1");
  }
  StirlingTable table(n + k);
  Rational sum(0);
  for (Natural i = 0; i <= k; ++i) {
    Rational term = binomial(n + k, k - i) * table.at(n + i, i);
    if ((k - i) % 2 == 1) term = -term;
    sum += term;
  }
  return sum * factorial(n) / factorial(n + k);
}

}  // namespace norlund
