#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "qident/qcore.hpp"

using namespace qident;

static Rational R(long n, long d = 1) { return Rational(n, d); }

// engine base p = 1/2, so q = 1/4
static const QBase kB{R(1, 2)};

TEST_CASE("base validation and powers") {
  CHECK(kB.q == R(1, 4));
  CHECK(kB.half_pow(3) == R(1, 8));
  CHECK(kB.half_pow(-1) == R(2));
  CHECK(kB.q_pow(-2) == R(16));
  CHECK(kB.q_pow(0) == R(1));
  CHECK(QBase(R(3, 5)).q == R(9, 25));
  for (long n : {0L, 1L, 2L, -1L}) CHECK_THROWS_AS(QBase(R(n)), std::domain_error);
  CHECK_THROWS_AS(QBase(R(3, 2)), std::domain_error);
  CHECK_THROWS_AS(QBase(R(-1, 2)), std::domain_error);
}

TEST_CASE("q-numbers, factorials, binomials") {
  CHECK(q_number(0, kB) == R(0));
  CHECK(q_number(1, kB) == R(1));
  CHECK(q_number(4, kB) == R(85, 64));
  CHECK(q_factorial(0, kB) == R(1));
  CHECK(q_factorial(3, kB) == R(105, 64));
  CHECK_THROWS_AS(q_factorial(-1, kB), std::domain_error);

  CHECK(q_binomial(4, 2, kB) == R(357, 256));
  CHECK(q_binomial(5, 2, kB) == R(5797, 4096));
  CHECK(q_binomial(6, 0, kB) == R(1));
  CHECK(q_binomial(6, 6, kB) == R(1));
  CHECK(q_binomial(5, 2, kB) == q_binomial(5, 3, kB));
  CHECK_THROWS_AS(q_binomial(3, 4, kB), std::out_of_range);
  CHECK_THROWS_AS(q_binomial(3, -1, kB), std::out_of_range);
}

TEST_CASE("scalar pochhammer") {
  CHECK(qpoch_scalar(R(1, 2), 0, kB) == R(1));
  CHECK(qpoch_scalar(R(1, 2), 3, kB) == R(217, 512));
  CHECK(qpoch_scalar(kB.q_pow(-2), 3, kB) == R(0));  // factor 1 - q^{-2} q^2
  CHECK_THROWS_AS(qpoch_scalar(R(1, 2), -1, kB), std::domain_error);
}

TEST_CASE("infinite pochhammer series and its reciprocal") {
  Series inf = qpoch_inf_series(R(2, 3), kB, 6);
  CHECK(inf.coeff(0) == R(1));
  CHECK(inf.coeff(1) == R(-8, 9));
  CHECK(inf.coeff(2) == R(64, 405));
  CHECK(inf.coeff(3) == R(-512, 76545));

  Series rec = qpoch_inf_reciprocal_series(R(2, 3), kB, 6);
  CHECK(rec.coeff(1) == R(8, 9));
  CHECK(rec.coeff(2) == R(256, 405));
  CHECK(rec.coeff(3) == R(32768, 76545));

  Series prod = inf * rec;
  CHECK(prod.coeff(0) == R(1));
  for (int k = 1; k <= 6; ++k) CHECK(prod.coeff(k) == R(0));
}

TEST_CASE("finite pochhammer in t") {
  Series two = qpoch_finite_in_t(R(1), 2, kB, 4);
  CHECK(two.coeff(0) == R(1));
  CHECK(two.coeff(1) == R(-5, 4));   // -(1+q)
  CHECK(two.coeff(2) == R(1, 4));    // q
  CHECK(two.coeff(3) == R(0));

  CHECK(qpoch_finite_in_t(R(2, 3), 0, kB, 3).coeff(0) == R(1));

  // (ct;q)_n * 1/(ct;q)_inf = 1/(c q^n t;q)_inf
  Series lhs = qpoch_finite_in_t(R(2, 3), 3, kB, 8) *
               qpoch_inf_reciprocal_series(R(2, 3), kB, 8);
  Series rhs = qpoch_inf_reciprocal_series(R(2, 3) * kB.q_pow(3), kB, 8);
  CHECK(equal_to_order(lhs, rhs, 8).equal);
}

TEST_CASE("lambda pochhammer") {
  // integer lambda reduces to the finite product
  Series lam2 = qpoch_lambda_series(R(3, 5), kB.q_pow(2), kB, 8);
  Series fin2 = qpoch_finite_in_t(R(3, 5), 2, kB, 8);
  CHECK(equal_to_order(lam2, fin2, 8).equal);

  // general L: (ct;q)_lambda * (cLt;q)_inf = (ct;q)_inf
  Rational c(2, 3), L(1, 3);
  Series lhs = qpoch_lambda_series(c, L, kB, 8) * qpoch_inf_series(c * L, kB, 8);
  CHECK(equal_to_order(lhs, qpoch_inf_series(c, kB, 8), 8).equal);
}

TEST_CASE("conjugate-pair product") {
  // (ct^{1/2};q)_k (-ct^{1/2};q)_k = (c^2 t;q^2)_k
  QBase sq{kB.q};  // base whose q equals kB.q^2
  for (long k : {0L, 1L, 2L, 4L}) {
    Series pair = qpoch_pair(R(2, 3), k, kB, 6);
    Series ref = qpoch_finite_in_t(R(4, 9), k, sq, 6);
    CHECK(equal_to_order(pair, ref, 6).equal);
  }
  CHECK(qpoch_pair(R(1, 2), 1, kB, 3).coeff(1) == R(-1, 4));
}
