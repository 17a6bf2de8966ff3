#pragma once

#include <mpfr.h>

#include <string>

#include "qident/rational.hpp"

namespace qident {

/// Floating-point value at a configurable binary precision (>= 64 bits).
/// All operations round to nearest; binary operations carry the larger
/// precision of their operands.
class BigFloat {
public:
  static constexpr mpfr_prec_t min_precision = 64;

  explicit BigFloat(mpfr_prec_t prec = min_precision);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from(const Rational& x, mpfr_prec_t prec);
  static BigFloat from_long(long n, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits = 8) const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) == 0;
  }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

  friend BigFloat abs(const BigFloat& x);
  static BigFloat exp(const BigFloat& x);
  BigFloat log2() const;
  BigFloat pow_int(long k) const;
  /// x^(num/den) via den-th root followed by integer power; requires x > 0.
  BigFloat pow_rational(const Rational& e) const;
  /// 2^k at this value's precision.
  static BigFloat pow2(long k, mpfr_prec_t prec);

private:
  mpfr_t v_;
};

}  // namespace qident
