#include "qident/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qident {

Rational::Rational(long n, long d) {
  mpq_init(v_);
  if (d == 0) throw std::domain_error("rational with zero denominator");
  mpq_set_si(v_, n, 1);
  mpq_t den;
  mpq_init(den);
  mpq_set_si(den, d, 1);
  mpq_div(v_, v_, den);
  mpq_clear(den);
}

Rational Rational::parse(const std::string& text) {
  // optional sign, digits, optionally "/" digits — nothing else
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) throw std::invalid_argument("malformed rational: '" + text + "'");
  bool has_den = false;
  if (i < text.size() && text[i] == '/') {
    has_den = true;
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start) throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (i != text.size()) throw std::invalid_argument("malformed rational: '" + text + "'");

  Rational r;
  std::string s = text[0] == '+' ? text.substr(1) : text;
  if (mpq_set_str(r.v_, s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (has_den && mpz_sgn(mpq_denref(r.v_)) == 0)
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  mpq_canonicalize(r.v_);
  return r;
}

std::string Rational::str() const {
  char* c = mpq_get_str(nullptr, 10, v_);
  std::string s(c);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(c, s.size() + 1);
  return s;
}

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("rational is not an integer: " + str());
  if (!mpz_fits_slong_p(mpq_numref(v_)))
    throw std::domain_error("integer out of range: " + str());
  return mpz_get_si(mpq_numref(v_));
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.v_, v_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  mpq_div(v_, v_, o.v_);
  return *this;
}

Rational Rational::pow(long k) const {
  if (k == 0) return Rational(1);
  if (is_zero()) {
    if (k < 0) throw std::domain_error("zero raised to a negative power");
    return Rational(0);
  }
  Rational r;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  mpz_pow_ui(mpq_numref(r.v_), mpq_numref(v_), e);
  mpz_pow_ui(mpq_denref(r.v_), mpq_denref(v_), e);
  if (k < 0) mpq_inv(r.v_, r.v_);
  mpq_canonicalize(r.v_);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace qident
