#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "norlund/rational.hpp"
#include "norlund/series.hpp"
#include "oracles.hpp"

using norlund::Natural;
using norlund::Rational;
using norlund::TruncatedSeries;

namespace {

TruncatedSeries make(std::vector<long> ints, Natural order) {
  std::vector<Rational> c(order);
  for (std::size_t i = 0; i < ints.size() && i < order; ++i) {
    c[i] = Rational(ints[i]);
  }
  return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("series construction requires at least one coefficient") {
  CHECK_THROWS_AS(TruncatedSeries({}), std::invalid_argument);
  CHECK(TruncatedSeries::one(1).order() == 1);
}

TEST_CASE("coefficient access is bounds checked") {
  TruncatedSeries s = TruncatedSeries::one(3);
  CHECK(s.coeff(0) == Rational(1));
  CHECK(s.coeff(2) == Rational(0));
  CHECK_THROWS_AS(s.coeff(3), std::out_of_range);
}

TEST_CASE("binary operations require matching orders") {
  TruncatedSeries a = TruncatedSeries::one(3);
  TruncatedSeries b = TruncatedSeries::one(4);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a - b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a.compose(b), std::invalid_argument);
}

TEST_CASE("product of 1+t and 1-t") {
  TruncatedSeries lhs = make({1, 1}, 4) * make({1, -1}, 4);
  CHECK(lhs == make({1, 0, -1, 0}, 4));
}

TEST_CASE("one is the multiplicative identity") {
  TruncatedSeries a = make({3, -2, 5, 7}, 4);
  CHECK(a * TruncatedSeries::one(4) == a);
}

TEST_CASE("exp(t) times exp(-t) is 1") {
  Natural order = 8;
  TruncatedSeries prod = TruncatedSeries::exponential(Rational(1), order) *
                         TruncatedSeries::exponential(Rational(-1), order);
  CHECK(prod == TruncatedSeries::one(order));
}

TEST_CASE("inverse of 1-t is the geometric series") {
  TruncatedSeries inv = make({1, -1}, 5).inverse();
  CHECK(inv == make({1, 1, 1, 1, 1}, 5));
  CHECK(TruncatedSeries::one(4).inverse() == TruncatedSeries::one(4));
}

TEST_CASE("inverse requires a unit constant term") {
  CHECK_THROWS_AS(make({0, 1}, 3).inverse(), std::domain_error);
}

TEST_CASE("inverse round trip on random series") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Rational> c(9);
    c[0] = oracles::rand_nonzero(rng);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = oracles::rand_rational(rng);
    TruncatedSeries a{std::vector<Rational>(c)};
    CHECK(a * a.inverse() == TruncatedSeries::one(9));
  }
}

TEST_CASE("log of 1+t is the alternating harmonic series") {
  TruncatedSeries l = make({1, 1}, 5).log();
  std::vector<Rational> expected = {Rational(0), Rational(1), Rational(-1, 2),
                                    Rational(1, 3), Rational(-1, 4)};
  CHECK(l == TruncatedSeries(expected));
  CHECK(TruncatedSeries::one(5).log() == TruncatedSeries::zero(5));
}

TEST_CASE("log of exp(t) is t") {
  CHECK(TruncatedSeries::exponential(Rational(1), 6).log() ==
        make({0, 1}, 6));
}

TEST_CASE("log requires constant term 1") {
  CHECK_THROWS_AS(make({2, 1}, 3).log(), std::domain_error);
  CHECK_THROWS_AS(make({0, 1}, 3).log(), std::domain_error);
}

TEST_CASE("exp of t matches the exponential constructor") {
  CHECK(make({0, 1}, 7).exp() ==
        TruncatedSeries::exponential(Rational(1), 7));
  CHECK(TruncatedSeries::zero(4).exp() == TruncatedSeries::one(4));
}

TEST_CASE("exp and log invert each other") {
  CHECK(make({1, 1}, 5).log().exp() == make({1, 1}, 5));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> c(8);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = oracles::rand_rational(rng);
    TruncatedSeries b{std::vector<Rational>(c)};
    CHECK(b.exp().log() == b);
  }
}

TEST_CASE("exp requires constant term 0") {
  CHECK_THROWS_AS(make({1, 1}, 3).exp(), std::domain_error);
}

TEST_CASE("square root of 1+t") {
  TruncatedSeries r = make({1, 1}, 4).pow(Rational(1, 2));
  std::vector<Rational> expected = {Rational(1), Rational(1, 2),
                                    Rational(-1, 8), Rational(1, 16)};
  CHECK(r == TruncatedSeries(expected));
  CHECK(r * r == make({1, 1}, 4));
}

TEST_CASE("pow basics") {
  TruncatedSeries a = make({1, 2, -1}, 6);
  CHECK(a.pow(Rational(0)) == TruncatedSeries::one(6));
  CHECK(a.pow(Rational(3)) == a * a * a);
  CHECK(a.pow(Rational(-1)) == a.inverse());
  CHECK_THROWS_AS(make({2, 1}, 3).pow(Rational(2)), std::domain_error);
}

TEST_CASE("composition basics") {
  TruncatedSeries f = TruncatedSeries::exponential(Rational(1), 6);
  CHECK(f.compose(make({0, 1}, 6)) == f);

  // 1/(1-t) composed with t^2.
  TruncatedSeries geo = make({1, -1}, 6).inverse();
  CHECK(geo.compose(make({0, 0, 1}, 6)) == make({1, 0, 1, 0, 1, 0}, 6));

  CHECK_THROWS_AS(f.compose(make({1, 1}, 6)), std::domain_error);
}

TEST_CASE("bernoulli kernel series small coefficients") {
  // (t/(e^t-1))^1: coefficient of t is -1/2.
  TruncatedSeries k1 = norlund::bernoulli_kernel_series(Rational(1), 5);
  CHECK(k1.coeff(0) == Rational(1));
  CHECK(k1.coeff(1) == Rational(-1, 2));
  CHECK(k1.coeff(2) == Rational(1, 12));

  // Squared kernel: 2! times the t^2 coefficient is 5/6.
  TruncatedSeries k2 = norlund::bernoulli_kernel_series(Rational(2), 4);
  CHECK(k2.coeff(2) * Rational(2) == Rational(5, 6));
}

TEST_CASE("euler kernel series small coefficients") {
  TruncatedSeries k1 = norlund::euler_kernel_series(Rational(1), 4);
  CHECK(k1.coeff(0) == Rational(1));
  CHECK(k1.coeff(1) == Rational(-1, 2));
  CHECK(k1.coeff(2) == Rational(0));
}

TEST_CASE("series route matches the classical recurrence oracle") {
  std::vector<Rational> b = oracles::bernoulli_numbers(20);
  for (Natural n = 0; n <= 20; ++n) {
    CHECK(norlund::bernoulli_from_series(n, Rational(1), Rational(0)) == b[n]);
  }

  std::vector<Rational> e = oracles::euler_numbers(16);
  for (Natural n = 0; n <= 16; ++n) {
    Rational scaled = norlund::pow(Rational(2), static_cast<long>(n)) *
                      norlund::euler_from_series(n, Rational(1), Rational(1, 2));
    CHECK(scaled == e[n]);
  }
}

TEST_CASE("series route spot values") {
  CHECK(norlund::bernoulli_from_series(1, Rational(1), Rational(0)) ==
        Rational(-1, 2));
  CHECK(norlund::bernoulli_from_series(0, Rational(5, 3), Rational(7)) ==
        Rational(1));
  CHECK(norlund::bernoulli_from_series(2, Rational(2), Rational(0)) ==
        Rational(5, 6));
  CHECK(norlund::euler_from_series(0, Rational(1), Rational(0)) == Rational(1));
  CHECK(norlund::euler_from_series(1, Rational(1), Rational(1, 2)) ==
        Rational(0));
  CHECK(norlund::euler_from_series(2, Rational(1), Rational(1, 2)) ==
        Rational(-1, 4));
}

TEST_CASE("series extraction checks the truncation order") {
  CHECK_THROWS_AS(norlund::bernoulli_from_series(4, Rational(1), Rational(0), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(norlund::euler_from_series(4, Rational(1), Rational(0), 3),
                  std::invalid_argument);
  CHECK(norlund::bernoulli_from_series(4, Rational(1), Rational(0), 5) ==
        Rational(-1, 30));
}
