#pragma once

#include "qident/rational.hpp"
#include "qident/series.hpp"

namespace qident {

/// The engine base is p = q^(1/2) with 0 < p < 1, so every half-integer
/// power q^(k/2) = p^k is an exact rational.
struct QBase {
  Rational p;
  Rational q;

  explicit QBase(const Rational& p_);

  /// q^(k/2) = p^k for any integer k.
  Rational half_pow(long k) const { return p.pow(k); }
  /// q^i for any integer i.
  Rational q_pow(long i) const { return q.pow(i); }
};

/// [a]_q = (1 - q^a)/(1 - q) for integer a.
Rational q_number(long a, const QBase& base);

/// [n]_q! = prod_{k=1..n} [k]_q.
Rational q_factorial(long n, const QBase& base);

/// Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k}); requires 0 <= k <= n.
Rational q_binomial(long n, long k, const QBase& base);

/// (a;q)_n = prod_{i=0..n-1} (1 - a q^i).
Rational qpoch_scalar(const Rational& a, long n, const QBase& base);

/// (ct;q)_inf as a series in t: coefficient of t^k is
/// (-1)^k q^{k(k-1)/2} c^k / (q;q)_k.
Series qpoch_inf_series(const Rational& c, const QBase& base, int N);

/// 1/(ct;q)_inf as a series in t: coefficient of t^k is c^k/(q;q)_k.
Series qpoch_inf_reciprocal_series(const Rational& c, const QBase& base, int N);

/// (ct;q)_lambda = (ct;q)_inf / (ctL;q)_inf with L = q^lambda.
Series qpoch_lambda_series(const Rational& c, const Rational& L, const QBase& base, int N);

/// prod_{i=0..n-1} (1 - c q^i t) expanded to order N.
Series qpoch_finite_in_t(const Rational& c, long n, const QBase& base, int N);

/// Conjugate-pair product (c t^{1/2};q)_k (-c t^{1/2};q)_k
///   = prod_{i=0..k-1} (1 - c^2 q^{2i} t), an integer-power series.
Series qpoch_pair(const Rational& c, long k, const QBase& base, int N);

}  // namespace qident
