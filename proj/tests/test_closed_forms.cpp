#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "norlund/closed_forms.hpp"
#include "norlund/polynomial.hpp"
#include "norlund/rational.hpp"
#include "norlund/series.hpp"
#include "norlund/stirling.hpp"
#include "oracles.hpp"

using norlund::Natural;
using norlund::Polynomial;
using norlund::Rational;
using norlund::StirlingTable;

TEST_CASE("bernoulli kernel derivative base values") {
  CHECK(norlund::bernoulli_kernel_derivative(0, Rational(5, 7)) == Rational(1));
  CHECK(norlund::bernoulli_kernel_derivative(1, Rational(-1)) ==
        Rational(-1, 2));
  CHECK(norlund::bernoulli_kernel_derivative(1, Rational(1)) == Rational(1, 2));
}

TEST_CASE("bernoulli kernel derivative validates the table") {
  StirlingTable small(3);
  CHECK_THROWS_AS(norlund::bernoulli_kernel_derivative(2, Rational(1), small),
                  std::invalid_argument);
  StirlingTable ok(4);
  CHECK(norlund::bernoulli_kernel_derivative(2, Rational(1), ok) ==
        norlund::bernoulli_kernel_derivative(2, Rational(1)));
}

TEST_CASE("euler kernel derivative base values") {
  CHECK(norlund::euler_kernel_derivative(0, Rational(-9, 4)) == Rational(1));
  CHECK(norlund::euler_kernel_derivative(1, Rational(-1)) == Rational(-1, 2));
  CHECK(norlund::euler_kernel_derivative(1, Rational(1)) == Rational(1, 2));
  StirlingTable small(2);
  CHECK_THROWS_AS(norlund::euler_kernel_derivative(3, Rational(1), small),
                  std::invalid_argument);
}

TEST_CASE("bernoulli polynomial shapes") {
  CHECK(norlund::bernoulli_polynomial(0, Rational(5, 3)) ==
        Polynomial({Rational(1)}));
  CHECK(norlund::bernoulli_polynomial(1, Rational(1)) ==
        Polynomial({Rational(-1, 2), Rational(1)}));
  CHECK(norlund::bernoulli_polynomial(2, Rational(2))(Rational(0)) ==
        Rational(5, 6));
}

TEST_CASE("bernoulli polynomial matches the recurrence oracle") {
  const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(1, 2),
                                    Rational(-3, 4)};
  for (Natural n = 0; n <= 20; ++n) {
    Polynomial p = norlund::bernoulli_polynomial(n, Rational(1));
    for (const Rational& x : xs) {
      CAPTURE(n);
      CHECK(p(x) == oracles::bernoulli_poly(n, x));
    }
  }
}

TEST_CASE("bernoulli numbers by closed form") {
  CHECK(norlund::bernoulli_number(0, Rational(3)) == Rational(1));
  CHECK(norlund::bernoulli_number(1, Rational(1)) == Rational(-1, 2));
  CHECK(norlund::bernoulli_number(2, Rational(1)) == Rational(1, 6));

  std::vector<Rational> b = oracles::bernoulli_numbers(20);
  for (Natural n = 0; n <= 20; ++n) {
    CHECK(norlund::bernoulli_number(n, Rational(1)) == b[n]);
  }
}

TEST_CASE("single-sum classical bernoulli numbers") {
  CHECK(norlund::classical_bernoulli_number(0) == Rational(1));
  CHECK(norlund::classical_bernoulli_number(1) == Rational(-1, 2));
  CHECK(norlund::classical_bernoulli_number(3) == Rational(0));

  std::vector<Rational> b = oracles::bernoulli_numbers(25);
  for (Natural n = 0; n <= 25; ++n) {
    CAPTURE(n);
    CHECK(norlund::classical_bernoulli_number(n) == b[n]);
    CHECK(norlund::classical_bernoulli_number(n) ==
          norlund::bernoulli_number(n, Rational(1)));
  }
}

TEST_CASE("euler polynomial shapes") {
  CHECK(norlund::euler_polynomial(0, Rational(-2)) == Polynomial({Rational(1)}));
  CHECK(norlund::euler_polynomial(1, Rational(1)) ==
        Polynomial({Rational(-1, 2), Rational(1)}));
  CHECK(norlund::euler_polynomial(2, Rational(1))(Rational(1, 2)) ==
        Rational(-1, 4));
}

TEST_CASE("euler polynomial matches the classical oracle") {
  const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(1, 2),
                                    Rational(-3, 4)};
  for (Natural n = 0; n <= 20; ++n) {
    Polynomial p = norlund::euler_polynomial(n, Rational(1));
    for (const Rational& x : xs) {
      CAPTURE(n);
      CHECK(p(x) == oracles::euler_poly(n, x));
    }
  }
}

TEST_CASE("euler numbers by the double sum") {
  CHECK(norlund::euler_number(0, Rational(9)) == Rational(1));
  CHECK(norlund::euler_number(1, Rational(1)) == Rational(0));
  CHECK(norlund::euler_number(2, Rational(1)) == Rational(-1));

  std::vector<Rational> e = oracles::euler_numbers(16);
  for (Natural n = 0; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(norlund::euler_number(n, Rational(1)) == e[n]);
  }
}

TEST_CASE("euler number normalization identity") {
  for (const Rational& alpha :
       {Rational(-2), Rational(-1, 2), Rational(1), Rational(7, 3)}) {
    for (Natural n = 0; n <= 10; ++n) {
      Rational two_n = norlund::pow(Rational(2), static_cast<long>(n));
      CAPTURE(n);
      CHECK(norlund::euler_number(n, alpha) ==
            two_n * norlund::euler_polynomial(n, alpha)(Rational(1, 2)));
    }
  }
}

TEST_CASE("closed forms agree with the series route off the classical line") {
  for (const Rational& alpha :
       {Rational(-2), Rational(-1, 2), Rational(2), Rational(7, 3)}) {
    for (Natural n = 0; n <= 8; ++n) {
      Polynomial b = norlund::bernoulli_polynomial(n, alpha);
      Polynomial e = norlund::euler_polynomial(n, alpha);
      for (const Rational& x : {Rational(0), Rational(1, 2), Rational(-3, 4)}) {
        CAPTURE(n);
        CHECK(b(x) == norlund::bernoulli_from_series(n, alpha, x));
        CHECK(e(x) == norlund::euler_from_series(n, alpha, x));
      }
    }
  }
}

TEST_CASE("polynomial utilities") {
  Polynomial p({Rational(1), Rational(0), Rational(3), Rational(0)});
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(0) == Rational(1));
  CHECK(p.coefficient(1) == Rational(0));
  CHECK(p.coefficient(2) == Rational(3));
  CHECK(p.coefficient(9) == Rational(0));
  CHECK(p(Rational(2)) == Rational(13));
  CHECK(!p.is_zero());
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial({Rational(0), Rational(0)}) == Polynomial());
}
