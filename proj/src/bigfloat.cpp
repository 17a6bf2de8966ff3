#include "qident/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace qident {

namespace {
mpfr_prec_t checked(mpfr_prec_t prec) {
  if (prec < BigFloat::min_precision)
    throw std::domain_error("precision below 64 bits");
  return prec;
}
}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, checked(prec));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from(const Rational& x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, x.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_long(long n, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, n, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int digits) const {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.*Re", digits, v_);
  return buf;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  BigFloat r(std::max(a.precision(), b.precision()));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log2() const {
  if (sign() <= 0) throw std::domain_error("log2 of non-positive value");
  BigFloat r(precision());
  mpfr_log2(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_int(long k) const {
  if (is_zero() && k < 0) throw std::domain_error("zero raised to a negative power");
  BigFloat r(precision());
  mpfr_pow_si(r.v_, v_, k, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_rational(const Rational& e) const {
  if (sign() <= 0) throw std::domain_error("rational power of a non-positive base");
  if (e.is_integer()) return pow_int(e.to_long());
  mpq_t q;
  mpq_init(q);
  mpq_set(q, e.raw());
  unsigned long den = mpz_get_ui(mpq_denref(q));
  long num = mpz_get_si(mpq_numref(q));
  mpq_clear(q);
  BigFloat root(precision());
  mpfr_rootn_ui(root.v_, v_, den, MPFR_RNDN);
  return root.pow_int(num);
}

BigFloat BigFloat::pow2(long k, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, 1, MPFR_RNDN);
  mpfr_mul_2si(r.v_, r.v_, k, MPFR_RNDN);
  return r;
}

}  // namespace qident
