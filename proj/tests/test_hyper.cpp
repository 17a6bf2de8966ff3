#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "qident/hyper.hpp"

using namespace qident;

static Rational R(long n, long d = 1) { return Rational(n, d); }

static const QBase kB{R(1, 2)};  // q = 1/4

using PA = ParamAtom;

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(R(1, 2), 0) == R(1));
  CHECK(rising_factorial(R(1, 2), 3) == R(15, 8));
  CHECK(rising_factorial(R(-2), 4) == R(0));
  CHECK(rising_factorial(R(1), 5) == R(120));
}

TEST_CASE("compensation exponent counts pairs twice") {
  PhiSpec a = PhiSpec::basic(kB, {PA::scalar(R(1, 3)), PA::scalar(R(1, 5))},
                             {PA::scalar(R(1, 7))}, PA::scalar(R(1, 2)));
  CHECK(a.compensation_exponent() == 0);  // 2phi1
  PhiSpec b = PhiSpec::basic(kB, {PA::pair(R(1, 3))}, {}, PA::scalar(R(1, 2)));
  CHECK(b.compensation_exponent() == -1);
  PhiSpec c = PhiSpec::basic(kB, {}, {PA::pair(R(1, 3))}, PA::scalar(R(1, 2)));
  CHECK(c.compensation_exponent() == 3);
  PhiSpec d = PhiSpec::basic(kB, {PA::zero()}, {}, PA::linear_t(R(1)));
  CHECK(d.compensation_exponent() == 0);
}

TEST_CASE("terminating 2phi1 evaluates the q-Chu-Vandermonde sum") {
  // 2phi1(q^{-n}, b; c; q, c q^n / b) = (c/b;q)_n / (c;q)_n
  long n = 3;
  Rational b(2, 3), c(3, 7);
  PhiSpec spec = PhiSpec::basic(kB, {PA::scalar(kB.q_pow(-n)), PA::scalar(b)},
                                {PA::scalar(c)},
                                PA::scalar(c * kB.q_pow(n) / b));
  Rational v = phi_eval_scalar(spec);
  CHECK(v == R(2021, 3488));
  CHECK(v == qpoch_scalar(c / b, n, kB) / qpoch_scalar(c, n, kB));
}

TEST_CASE("scalar evaluation guards") {
  // no q^{-m} numerator: never terminates
  PhiSpec open = PhiSpec::basic(kB, {PA::scalar(R(1, 3))}, {}, PA::scalar(R(1, 2)));
  CHECK_THROWS_AS(phi_eval_scalar(open, 8), std::domain_error);
  // denominator (q^{-2};q)_k dies at k=3, before the numerator terminates at k=6
  PhiSpec bad = PhiSpec::basic(kB, {PA::scalar(kB.q_pow(-5))},
                               {PA::scalar(kB.q_pow(-2))}, PA::scalar(R(1, 2)));
  CHECK_THROWS_AS(phi_eval_scalar(bad), std::domain_error);
}

TEST_CASE("phi series reproduces the Euler products") {
  Rational c(2, 3);
  // 0phi0(-;-;q, ct) = (ct;q)_inf
  PhiSpec e1 = PhiSpec::basic(kB, {}, {}, PA::linear_t(c));
  CHECK(equal_to_order(phi_series(e1, 10), qpoch_inf_series(c, kB, 10), 10).equal);
  // 1phi0(0;-;q, ct) = 1/(ct;q)_inf
  PhiSpec e2 = PhiSpec::basic(kB, {PA::zero()}, {}, PA::linear_t(c));
  CHECK(equal_to_order(phi_series(e2, 10), qpoch_inf_reciprocal_series(c, kB, 10), 10).equal);
}

TEST_CASE("phi series termination with a linear argument") {
  // 1phi1(q^{-2}; 1/3; q, t): term k lands on t^k and dies after k = 2
  PhiSpec spec = PhiSpec::basic(kB, {PA::scalar(kB.q_pow(-2))},
                                {PA::scalar(R(1, 3))}, PA::linear_t(R(1)));
  Series s = phi_series(spec, 8);
  CHECK(s.coeff(0) == R(1));
  CHECK(s.coeff(1) == R(30));
  CHECK(s.coeff(2) == R(288, 11));
  for (int k = 3; k <= 8; ++k) CHECK(s.coeff(k) == R(0));
}

TEST_CASE("terminating pFq evaluates the Chu-Vandermonde sum") {
  // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
  PhiSpec spec = PhiSpec::classical_f({R(-4), R(1, 3)}, {R(5, 2)}, R(1));
  Rational v = f_eval_scalar(spec);
  CHECK(v == R(38285, 56133));
  CHECK(v == rising_factorial(R(5, 2) - R(1, 3), 4) / rising_factorial(R(5, 2), 4));

  CHECK(f_eval_scalar(PhiSpec::classical_f({R(0), R(7)}, {R(2)}, R(1, 3))) == R(1));
  CHECK_THROWS_AS(f_eval_scalar(PhiSpec::classical_f({R(1, 3)}, {R(5, 2)}, R(1, 2)), 8),
                  std::domain_error);
}

TEST_CASE("classical coefficient series") {
  // 0F0 at 2t is exp(2t)
  Series ex = f_series(PhiSpec::classical_f({}, {}), Series::monomial(R(2), 1, 5), 5);
  Rational kfact(1);
  for (int k = 0; k <= 5; ++k) {
    if (k > 0) kfact *= R(k);
    CHECK(ex.coeff(k) == R(2).pow(k) / kfact);
  }
  // 1F0(1) at t is the geometric series
  Series geom = f_series(PhiSpec::classical_f({R(1)}, {}), Series::monomial(R(1), 1, 6), 6);
  for (int k = 0; k <= 6; ++k) CHECK(geom.coeff(k) == R(1));
  // formal composition needs a zero constant term
  CHECK_THROWS_AS(f_series(PhiSpec::classical_f({R(1)}, {}),
                           Series::constant(R(1), 4), 4),
                  std::domain_error);
}
