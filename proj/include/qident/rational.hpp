#pragma once

#include <gmp.h>

#include <iosfwd>
#include <string>

namespace qident {

/// Arbitrary-precision rational, always canonical: positive denominator,
/// gcd(|num|, den) = 1.  Immutable value semantics; all operations exact.
class Rational {
public:
  Rational() { mpq_init(v_); }
  Rational(long n) {
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(long n, long d);
  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  /// Parse "[+-]digits[/digits]"; throws std::invalid_argument on anything
  /// else (decimals, whitespace, signed denominator, zero denominator).
  static Rational parse(const std::string& text);

  /// Canonical text: "n" when the denominator is 1, else "n/d".
  std::string str() const;

  bool is_zero() const { return mpq_sgn(v_) == 0; }
  bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
  int sign() const { return mpq_sgn(v_); }

  /// Value as long; throws std::domain_error unless integral and in range.
  long to_long() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  /// x^k for integer k; 0^0 = 1; throws std::domain_error for 0^negative.
  Rational pow(long k) const;

  friend Rational abs(const Rational& x) {
    Rational r;
    mpq_abs(r.v_, x.v_);
    return r;
  }

  const mpq_t& raw() const { return v_; }

private:
  mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace qident
