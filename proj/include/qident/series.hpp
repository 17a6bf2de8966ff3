#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qident/bigfloat.hpp"
#include "qident/rational.hpp"

namespace qident {

/// Truncated formal power series in t with coefficients c_0..c_N.  The
/// scalar kind is the template parameter (exact Rational or BigFloat);
/// mixing kinds is a compile-time error.  Binary operations truncate to
/// the smaller order.
template <typename K>
class BasicSeries {
public:
  explicit BasicSeries(int order) : c_(static_cast<std::size_t>(check_order(order)) + 1) {}

  static BasicSeries constant(const K& value, int order) {
    BasicSeries s(order);
    s.c_[0] = value;
    return s;
  }

  /// c * t^k truncated at `order` (zero series when k > order).
  static BasicSeries monomial(const K& c, int k, int order) {
    BasicSeries s(order);
    if (k < 0) throw std::out_of_range("negative power");
    if (k <= order) s.c_[static_cast<std::size_t>(k)] = c;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const K& coeff(int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("coefficient index out of range");
    return c_[static_cast<std::size_t>(k)];
  }

  K& at(int k) {
    if (k < 0 || k > order()) throw std::out_of_range("coefficient index out of range");
    return c_[static_cast<std::size_t>(k)];
  }

  BasicSeries truncated(int new_order) const {
    BasicSeries s(std::min(new_order, order()));
    for (int k = 0; k <= s.order(); ++k) s.c_[k] = c_[k];
    return s;
  }

  friend BasicSeries operator+(const BasicSeries& f, const BasicSeries& g) {
    BasicSeries s(std::min(f.order(), g.order()));
    for (int k = 0; k <= s.order(); ++k) s.c_[k] = f.c_[k] + g.c_[k];
    return s;
  }

  friend BasicSeries operator-(const BasicSeries& f, const BasicSeries& g) {
    BasicSeries s(std::min(f.order(), g.order()));
    for (int k = 0; k <= s.order(); ++k) s.c_[k] = f.c_[k] - g.c_[k];
    return s;
  }

  BasicSeries operator-() const {
    BasicSeries s(order());
    for (int k = 0; k <= order(); ++k) s.c_[k] = -c_[k];
    return s;
  }

  friend BasicSeries operator*(const K& c, const BasicSeries& f) {
    BasicSeries s(f.order());
    for (int k = 0; k <= f.order(); ++k) s.c_[k] = c * f.c_[k];
    return s;
  }

  /// Cauchy product truncated at min(order f, order g).
  friend BasicSeries operator*(const BasicSeries& f, const BasicSeries& g) {
    BasicSeries s(std::min(f.order(), g.order()));
    for (int i = 0; i <= s.order(); ++i) {
      if (is_zero_coeff(f.c_[i])) continue;
      for (int j = 0; i + j <= s.order(); ++j) s.c_[i + j] += f.c_[i] * g.c_[j];
    }
    return s;
  }

  /// Multiplicative inverse to order N; requires a nonzero constant term.
  BasicSeries reciprocal() const {
    if (is_zero_coeff(c_[0])) throw std::domain_error("series reciprocal: zero constant term");
    BasicSeries s(order());
    s.c_[0] = one() / c_[0];
    for (int k = 1; k <= order(); ++k) {
      K acc{};
      for (int i = 1; i <= k; ++i) acc += c_[i] * s.c_[k - i];
      s.c_[k] = -(acc / c_[0]);
    }
    return s;
  }

  /// outer(inner).  When inner has zero constant term this is formal
  /// composition; otherwise the stored coefficients of `outer` are taken
  /// as an exact polynomial and evaluated at `inner` by Horner's rule
  /// (the caller asserts that outer really is a polynomial).
  friend BasicSeries compose(const BasicSeries& outer, const BasicSeries& inner) {
    int n = std::min(outer.order(), inner.order());
    BasicSeries in = inner.truncated(n);
    BasicSeries s(n);
    for (int k = outer.order(); k >= 0; --k) {
      s = s * in;
      s.c_[0] += outer.c_[k];
    }
    return s;
  }

  /// Polynomial (coefficient vector, lowest power first) evaluated at a
  /// series by Horner's rule; inner may have any constant term.
  static BasicSeries eval_poly(const std::vector<K>& poly, const BasicSeries& inner) {
    BasicSeries s(inner.order());
    for (std::size_t i = poly.size(); i-- > 0;) {
      s = s * inner;
      s.c_[0] += poly[i];
    }
    return s;
  }

  BasicSeries pow(int k) const {
    if (k < 0) throw std::out_of_range("negative series power");
    BasicSeries s = constant(one(), order());
    for (int i = 0; i < k; ++i) s = s * *this;
    return s;
  }

  struct Mismatch {
    bool equal;
    int power;
    K lhs, rhs;
  };

  /// Compare coefficients up to order M; on failure reports the smallest
  /// mismatching power with both values.
  friend Mismatch equal_to_order(const BasicSeries& f, const BasicSeries& g, int M) {
    if (M > f.order() || M > g.order())
      throw std::out_of_range("comparison order exceeds series order");
    for (int k = 0; k <= M; ++k)
      if (!(f.c_[k] == g.c_[k])) return {false, k, f.c_[k], g.c_[k]};
    return {true, -1, K{}, K{}};
  }

private:
  static int check_order(int order) {
    if (order < 0) throw std::out_of_range("negative series order");
    return order;
  }
  static K one() {
    if constexpr (std::is_same_v<K, Rational>)
      return Rational(1);
    else
      return BigFloat::from_long(1, BigFloat::min_precision);
  }
  static bool is_zero_coeff(const K& x) { return x.is_zero(); }

  std::vector<K> c_;
};

using Series = BasicSeries<Rational>;
using FloatSeries = BasicSeries<BigFloat>;

}  // namespace qident
