#include "qident/hyper.hpp"

#include <stdexcept>

namespace qident {

namespace {

Series shifted(const Series& s, int k) {
  Series out(s.order());
  for (int i = 0; i + k <= s.order(); ++i) out.at(i + k) = s.coeff(i);
  return out;
}

Rational comp_power(const Rational& comp, int e) {
  return e >= 0 ? comp.pow(e) : (Rational(1) / comp).pow(-e);
}

}  // namespace

PhiSpec PhiSpec::basic(const QBase& base, std::vector<ParamAtom> num,
                       std::vector<ParamAtom> den, ParamAtom arg) {
  PhiSpec s;
  s.classical = false;
  s.base = base;
  s.num = std::move(num);
  s.den = std::move(den);
  s.arg = arg;
  return s;
}

PhiSpec PhiSpec::classical_f(std::vector<Rational> num, std::vector<Rational> den,
                             const Rational& arg) {
  PhiSpec s;
  s.classical = true;
  for (const auto& a : num) s.num.push_back(ParamAtom::scalar(a));
  for (const auto& b : den) s.den.push_back(ParamAtom::scalar(b));
  s.arg = ParamAtom::scalar(arg);
  return s;
}

int PhiSpec::count(const std::vector<ParamAtom>& atoms) const {
  int n = 0;
  for (const auto& a : atoms) n += a.weight();
  return n;
}

int PhiSpec::compensation_exponent() const { return 1 + count(den) - count(num); }

Rational rising_factorial(const Rational& a, long k) {
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= a + Rational(i);
  return r;
}

Rational phi_eval_scalar(const PhiSpec& spec, int guard) {
  if (spec.classical) throw std::invalid_argument("basic evaluator given a classical spec");
  const QBase& base = *spec.base;
  if (spec.arg.kind != ParamAtom::Kind::Scalar)
    throw std::invalid_argument("scalar evaluation requires a scalar argument");
  for (const auto& a : spec.num)
    if (a.kind != ParamAtom::Kind::Scalar && a.kind != ParamAtom::Kind::Zero)
      throw std::invalid_argument("scalar evaluation requires scalar parameters");
  for (const auto& b : spec.den)
    if (b.kind != ParamAtom::Kind::Scalar && b.kind != ParamAtom::Kind::Zero)
      throw std::invalid_argument("scalar evaluation requires scalar parameters");

  const int e = spec.compensation_exponent();
  const Rational& x = spec.arg.c;
  Rational total(0);
  for (int k = 0; k <= guard; ++k) {
    Rational numprod(1);
    for (const auto& a : spec.num)
      if (a.kind == ParamAtom::Kind::Scalar) numprod *= qpoch_scalar(a.c, k, base);
    if (numprod.is_zero()) return total;  // terminated

    Rational term = numprod;
    for (const auto& b : spec.den) {
      if (b.kind != ParamAtom::Kind::Scalar) continue;
      Rational d = qpoch_scalar(b.c, k, base);
      if (d.is_zero())
        throw std::domain_error("denominator Pochhammer vanishes at k=" + std::to_string(k));
      term /= d;
    }
    Rational comp = Rational(k % 2 ? -1 : 1) * base.q_pow(static_cast<long>(k) * (k - 1) / 2);
    term *= comp_power(comp, e);
    term *= x.pow(k) / qpoch_scalar(base.q, k, base);
    total += term;
  }
  throw std::domain_error("series does not terminate within guard");
}

Series phi_series(const PhiSpec& spec, int N, int guard) {
  if (spec.classical) throw std::invalid_argument("basic evaluator given a classical spec");
  const QBase& base = *spec.base;
  const bool linear_arg = spec.arg.kind == ParamAtom::Kind::LinearT;
  if (!linear_arg && spec.arg.kind != ParamAtom::Kind::Scalar)
    throw std::invalid_argument("argument must be scalar or linear in t");

  const int e = spec.compensation_exponent();
  const int kmax = linear_arg ? N : guard;
  Series acc(N);
  for (int k = 0; k <= kmax; ++k) {
    Rational sc(1);
    for (const auto& a : spec.num)
      if (a.kind == ParamAtom::Kind::Scalar) sc *= qpoch_scalar(a.c, k, base);
    if (sc.is_zero()) return acc;  // a scalar numerator parameter terminated the sum
    for (const auto& b : spec.den) {
      if (b.kind != ParamAtom::Kind::Scalar) continue;
      Rational d = qpoch_scalar(b.c, k, base);
      if (d.is_zero())
        throw std::domain_error("denominator Pochhammer vanishes at k=" + std::to_string(k));
      sc /= d;
    }
    Rational comp = Rational(k % 2 ? -1 : 1) * base.q_pow(static_cast<long>(k) * (k - 1) / 2);
    sc *= comp_power(comp, e);
    sc *= spec.arg.c.pow(k) / qpoch_scalar(base.q, k, base);

    Series part = Series::constant(sc, N);
    for (const auto& a : spec.num) {
      if (a.kind == ParamAtom::Kind::LinearT)
        part = part * qpoch_finite_in_t(a.c, k, base, N);
      else if (a.kind == ParamAtom::Kind::Pair)
        part = part * qpoch_pair(a.c, k, base, N);
    }
    for (const auto& b : spec.den) {
      if (b.kind == ParamAtom::Kind::LinearT)
        part = part * qpoch_finite_in_t(b.c, k, base, N).reciprocal();
      else if (b.kind == ParamAtom::Kind::Pair)
        part = part * qpoch_pair(b.c, k, base, N).reciprocal();
    }
    acc = acc + (linear_arg ? shifted(part, k) : part);
  }
  if (!linear_arg)
    throw std::domain_error("scalar-argument series does not terminate within guard");
  return acc;
}

Rational f_eval_scalar(const PhiSpec& spec, int guard) {
  if (!spec.classical) throw std::invalid_argument("classical evaluator given a basic spec");
  const Rational& x = spec.arg.c;
  Rational total(0);
  Rational kfact(1);
  for (int k = 0; k <= guard; ++k) {
    Rational numprod(1);
    for (const auto& a : spec.num) numprod *= rising_factorial(a.c, k);
    if (numprod.is_zero()) return total;  // terminated

    Rational term = numprod;
    for (const auto& b : spec.den) {
      Rational d = rising_factorial(b.c, k);
      if (d.is_zero())
        throw std::domain_error("denominator rising factorial vanishes at k=" +
                                std::to_string(k));
      term /= d;
    }
    if (k > 0) kfact *= Rational(k);
    total += term * x.pow(k) / kfact;
  }
  throw std::domain_error("series does not terminate within guard");
}

Series f_series(const PhiSpec& spec, const Series& inner, int N) {
  if (!spec.classical) throw std::invalid_argument("classical evaluator given a basic spec");
  if (!inner.coeff(0).is_zero())
    throw std::domain_error("formal composition requires a zero constant term");

  Series outer(N);
  Rational c(1);
  bool terminated = false;
  outer.at(0) = c;
  for (int k = 1; k <= N && !terminated; ++k) {
    Rational ratio(1);
    for (const auto& a : spec.num) ratio *= a.c + Rational(k - 1);
    if (ratio.is_zero()) {
      terminated = true;
      break;
    }
    for (const auto& b : spec.den) {
      Rational d = b.c + Rational(k - 1);
      if (d.is_zero())
        throw std::domain_error("denominator rising factorial vanishes at k=" +
                                std::to_string(k));
      ratio /= d;
    }
    c *= ratio / Rational(k);
    outer.at(k) = c;
  }
  return compose(outer, inner.truncated(N));
}

}  // namespace qident
