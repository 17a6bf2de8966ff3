#pragma once

#include <optional>
#include <vector>

#include "qident/qcore.hpp"
#include "qident/rational.hpp"
#include "qident/series.hpp"

namespace qident {

/// One upper or lower parameter of a hypergeometric spec.
///   Scalar(c)  — plain value
///   Zero       — the parameter 0, contributing (0;q)_k = 1
///   LinearT(c) — the t-dependent parameter c*t
///   Pair(c)    — the conjugate pair +-c*t^{1/2}, counted as TWO parameters;
///                its Pochhammer product involves only integer powers of t
struct ParamAtom {
  enum class Kind { Scalar, Zero, LinearT, Pair };
  Kind kind = Kind::Scalar;
  Rational c;

  static ParamAtom scalar(const Rational& c) { return {Kind::Scalar, c}; }
  static ParamAtom zero() { return {Kind::Zero, Rational(0)}; }
  static ParamAtom linear_t(const Rational& c) { return {Kind::LinearT, c}; }
  static ParamAtom pair(const Rational& c) { return {Kind::Pair, c}; }

  int weight() const { return kind == Kind::Pair ? 2 : 1; }
};

/// Declarative description of a basic (r-phi-s) or classical (p-F-q)
/// hypergeometric series.  The compensation factor of the basic kind is
/// ((-1)^k q^{k(k-1)/2})^{1+s-r} with pair-inclusive counts r, s.
struct PhiSpec {
  bool classical = false;
  std::optional<QBase> base;  // set iff basic
  std::vector<ParamAtom> num;
  std::vector<ParamAtom> den;
  ParamAtom arg = ParamAtom::scalar(Rational(0));  // Scalar or LinearT

  static PhiSpec basic(const QBase& base, std::vector<ParamAtom> num,
                       std::vector<ParamAtom> den, ParamAtom arg);
  static PhiSpec classical_f(std::vector<Rational> num, std::vector<Rational> den,
                             const Rational& arg = Rational(0));

  int count(const std::vector<ParamAtom>& atoms) const;
  /// 1 + s - r with pair-inclusive counts.
  int compensation_exponent() const;
};

/// (a)_k = a (a+1) ... (a+k-1).
Rational rising_factorial(const Rational& a, long k);

/// Exact value of a terminating basic series with scalar parameters and
/// scalar argument; throws if no numerator parameter equals q^{-m} with
/// m <= guard, or if a denominator Pochhammer vanishes first.
Rational phi_eval_scalar(const PhiSpec& spec, int guard = 64);

/// Series-mode evaluation: t-dependent atoms contribute finite Pochhammer
/// series (or reciprocals) per term, a LinearT argument shifts term k to
/// t-order k.  The term loop stops at order N or at termination.
Series phi_series(const PhiSpec& spec, int N, int guard = 64);

/// Exact value of a terminating classical series (some numerator parameter
/// a non-positive integer).
Rational f_eval_scalar(const PhiSpec& spec, int guard = 64);

/// Formal composition of the classical coefficient series with `inner`
/// (zero constant term required), truncated at order N.
Series f_series(const PhiSpec& spec, const Series& inner, int N);

}  // namespace qident
