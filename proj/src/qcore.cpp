#include "qident/qcore.hpp"

#include <stdexcept>

namespace qident {

QBase::QBase(const Rational& p_) : p(p_), q(p_ * p_) {
  if (!(Rational(0) < p && p < Rational(1)))
    throw std::domain_error("base p must satisfy 0 < p < 1, got " + p.str());
}

Rational q_number(long a, const QBase& base) {
  return (Rational(1) - base.q_pow(a)) / (Rational(1) - base.q);
}

Rational q_factorial(long n, const QBase& base) {
  if (n < 0) throw std::domain_error("q-factorial of a negative integer");
  Rational r(1);
  for (long k = 1; k <= n; ++k) r *= q_number(k, base);
  return r;
}

Rational q_binomial(long n, long k, const QBase& base) {
  if (k < 0 || k > n) throw std::out_of_range("q-binomial requires 0 <= k <= n");
  return qpoch_scalar(base.q, n, base) /
         (qpoch_scalar(base.q, k, base) * qpoch_scalar(base.q, n - k, base));
}

Rational qpoch_scalar(const Rational& a, long n, const QBase& base) {
  if (n < 0) throw std::domain_error("q-Pochhammer of negative length");
  Rational r(1);
  Rational aq = a;
  for (long i = 0; i < n; ++i) {
    r *= Rational(1) - aq;
    aq *= base.q;
  }
  return r;
}

Series qpoch_inf_series(const Rational& c, const QBase& base, int N) {
  Series s(N);
  Rational term(1);  // (-1)^k q^{k(k-1)/2} c^k / (q;q)_k
  s.at(0) = term;
  for (int k = 1; k <= N; ++k) {
    term *= -c * base.q_pow(k - 1) / (Rational(1) - base.q_pow(k));
    s.at(k) = term;
  }
  return s;
}

Series qpoch_inf_reciprocal_series(const Rational& c, const QBase& base, int N) {
  Series s(N);
  Rational term(1);  // c^k / (q;q)_k
  s.at(0) = term;
  for (int k = 1; k <= N; ++k) {
    term *= c / (Rational(1) - base.q_pow(k));
    s.at(k) = term;
  }
  return s;
}

Series qpoch_lambda_series(const Rational& c, const Rational& L, const QBase& base, int N) {
  return qpoch_inf_series(c, base, N) * qpoch_inf_reciprocal_series(c * L, base, N);
}

Series qpoch_finite_in_t(const Rational& c, long n, const QBase& base, int N) {
  if (n < 0) throw std::domain_error("q-Pochhammer of negative length");
  Series s = Series::constant(Rational(1), N);
  Rational cq = c;
  for (long i = 0; i < n; ++i) {
    Series f = Series::constant(Rational(1), N);
    if (N >= 1) f.at(1) = -cq;
    s = s * f;
    cq *= base.q;
  }
  return s;
}

Series qpoch_pair(const Rational& c, long k, const QBase& base, int N) {
  if (k < 0) throw std::domain_error("q-Pochhammer of negative length");
  Series s = Series::constant(Rational(1), N);
  Rational c2q = c * c;
  Rational q2 = base.q * base.q;
  for (long i = 0; i < k; ++i) {
    Series f = Series::constant(Rational(1), N);
    if (N >= 1) f.at(1) = -c2q;
    s = s * f;
    c2q *= q2;
  }
  return s;
}

}  // namespace qident
