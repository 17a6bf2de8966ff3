#include "qident/families.hpp"

#include <stdexcept>

namespace qident {

bool ParamBinding::has(const std::string& name) const {
  for (const auto& [k, v] : kv_)
    if (k == name) return true;
  return false;
}

const Rational& ParamBinding::get(const std::string& name) const {
  for (const auto& [k, v] : kv_)
    if (k == name) return v;
  throw std::invalid_argument("missing parameter '" + name + "'");
}

long ParamBinding::get_int(const std::string& name) const {
  const Rational& v = get(name);
  if (!v.is_integer())
    throw std::invalid_argument("parameter '" + name + "' must be an integer, got " + v.str());
  return v.to_long();
}

void ParamBinding::set(const std::string& name, const Rational& value) {
  for (auto& [k, v] : kv_)
    if (k == name) {
      v = value;
      return;
    }
  kv_.emplace_back(name, value);
}

namespace {

const struct {
  FamilyId id;
  const char* name;
} kFamilyNames[] = {
    {FamilyId::qZ, "q-batemanz"},
    {FamilyId::qB, "q-bateman"},
    {FamilyId::qPasternack, "q-pasternack"},
    {FamilyId::qSylvester, "q-sylvester"},
    {FamilyId::qCesaro, "q-cesaro"},
    {FamilyId::cZ, "classical-batemanz"},
    {FamilyId::cB, "classical-bateman"},
    {FamilyId::cPasternack, "classical-pasternack"},
    {FamilyId::cSylvester, "classical-sylvester"},
    {FamilyId::cCesaro, "classical-cesaro"},
};

QBase base_from(const ParamBinding& binding) { return QBase(binding.get("p")); }

}  // namespace

std::optional<FamilyId> family_from_cli(const std::string& name) {
  for (const auto& f : kFamilyNames)
    if (name == f.name) return f.id;
  return std::nullopt;
}

std::string family_cli_name(FamilyId family) {
  for (const auto& f : kFamilyNames)
    if (f.id == family) return f.name;
  return "?";
}

bool family_is_classical(FamilyId family) {
  switch (family) {
    case FamilyId::cZ:
    case FamilyId::cB:
    case FamilyId::cPasternack:
    case FamilyId::cSylvester:
    case FamilyId::cCesaro:
      return true;
    default:
      return false;
  }
}

std::vector<std::string> family_param_names(FamilyId family) {
  switch (family) {
    case FamilyId::qZ:
      return {"p", "z"};
    case FamilyId::qB:
      return {"p", "a"};
    case FamilyId::qPasternack:
      return {"p", "b", "mu"};
    case FamilyId::qSylvester:
      return {"p", "z", "Z"};
    case FamilyId::qCesaro:
      return {"p", "s", "z"};
    case FamilyId::cZ:
    case FamilyId::cB:
      return {"z"};
    case FamilyId::cPasternack:
      return {"m", "z"};
    case FamilyId::cSylvester:
      return {"z"};
    case FamilyId::cCesaro:
      return {"s", "z"};
  }
  return {};
}

Rational q_family_value(FamilyId family, long n, const ParamBinding& binding) {
  if (n < 0) throw std::invalid_argument("family degree must be >= 0");
  const QBase base = base_from(binding);
  const Rational qn = base.q_pow(n);
  const Rational qmn = base.q_pow(-n);
  const Rational qn1 = base.q_pow(n + 1);
  using A = ParamAtom;
  switch (family) {
    case FamilyId::qZ: {
      const Rational& z = binding.get("z");
      return phi_eval_scalar(PhiSpec::basic(base, {A::scalar(qmn), A::scalar(qn1)},
                                            {A::scalar(base.q), A::scalar(base.q)},
                                            A::scalar(qn * z)));
    }
    case FamilyId::qB: {
      const Rational& a = binding.get("a");
      return phi_eval_scalar(PhiSpec::basic(base, {A::scalar(qmn), A::scalar(qn1), A::scalar(a)},
                                            {A::scalar(base.q), A::scalar(base.q)},
                                            A::scalar(qn)));
    }
    case FamilyId::qPasternack: {
      const Rational& b = binding.get("b");
      const Rational& mu = binding.get("mu");
      return phi_eval_scalar(PhiSpec::basic(base, {A::scalar(qmn), A::scalar(qn1), A::scalar(b)},
                                            {A::scalar(base.q), A::scalar(mu)},
                                            A::scalar(qn)));
    }
    case FamilyId::qSylvester: {
      const Rational& z = binding.get("z");
      const Rational& Z = binding.get("Z");
      if (z.is_zero()) throw std::invalid_argument("q-Sylvester requires z != 0");
      Rational phi = phi_eval_scalar(
          PhiSpec::basic(base, {A::scalar(qmn), A::scalar(Z)}, {}, A::scalar(qn / z)));
      return z.pow(n) / qpoch_scalar(base.q, n, base) * phi;
    }
    case FamilyId::qCesaro: {
      long s = binding.get_int("s");
      if (s < 0) throw std::invalid_argument("q-Cesaro requires s >= 0");
      const Rational& z = binding.get("z");
      Rational phi = phi_eval_scalar(PhiSpec::basic(base, {A::scalar(qmn), A::scalar(base.q)},
                                                    {A::scalar(base.q_pow(-s - n))},
                                                    A::scalar(z)));
      return qpoch_scalar(base.q_pow(s + 1), n, base) / qpoch_scalar(base.q, n, base) * phi;
    }
    default:
      throw std::invalid_argument("not a q-family");
  }
}

Rational qpasternack_lattice_value(long m, long j, long n, const QBase& base) {
  if (m < 0 || j < 0 || n < 0) throw std::invalid_argument("lattice indices must be >= 0");
  using A = ParamAtom;
  return phi_eval_scalar(PhiSpec::basic(
      base, {A::scalar(base.q_pow(-m)), A::scalar(base.q_pow(m + 1)), A::scalar(base.q_pow(-n))},
      {A::scalar(base.q), A::scalar(base.q_pow(j + 1))}, A::scalar(base.q_pow(n))));
}

std::vector<Rational> q_batemanz_poly_coeffs(long m, const QBase& base) {
  // 2phi2(q^{-m}, q^{m+1}; q, q; q, q^m x) unrolled as a polynomial in x
  std::vector<Rational> coeffs;
  const Rational qmm = base.q_pow(-m);
  const Rational qm1 = base.q_pow(m + 1);
  for (long k = 0; k <= m; ++k) {
    Rational c = qpoch_scalar(qmm, k, base) * qpoch_scalar(qm1, k, base);
    Rational qqk = qpoch_scalar(base.q, k, base);
    c /= qqk * qqk * qqk;
    c *= Rational(k % 2 ? -1 : 1) * base.q_pow(k * (k - 1) / 2) * base.q_pow(m * k);
    coeffs.push_back(c);
  }
  return coeffs;
}

Rational cesaro_closed_form(long n, long s, const Rational& z, const QBase& base) {
  if (n < 0 || s < 0) throw std::invalid_argument("degree and s must be >= 0");
  Rational total(0);
  const Rational zqs = z * base.q_pow(s);
  for (long k = 0; k <= n; ++k) total += q_binomial(k + s, s, base) * zqs.pow(n - k);
  return total;
}

Rational classical_family_value(FamilyId family, long n, const ParamBinding& binding) {
  if (n < 0) throw std::invalid_argument("family degree must be >= 0");
  const Rational mn(-n);
  const Rational n1(n + 1);
  switch (family) {
    case FamilyId::cZ:
      return f_eval_scalar(PhiSpec::classical_f({mn, n1}, {Rational(1), Rational(1)},
                                                binding.get("z")));
    case FamilyId::cB: {
      Rational w = (binding.get("z") + Rational(1)) / Rational(2);
      return f_eval_scalar(
          PhiSpec::classical_f({mn, n1, w}, {Rational(1), Rational(1)}, Rational(1)));
    }
    case FamilyId::cPasternack: {
      const Rational& m = binding.get("m");
      if (m == Rational(-1))
        throw std::invalid_argument("classical Pasternack requires m != -1");
      Rational w = (binding.get("z") + m + Rational(1)) / Rational(2);
      return f_eval_scalar(
          PhiSpec::classical_f({mn, n1, w}, {Rational(1), m + Rational(1)}, Rational(1)));
    }
    case FamilyId::cSylvester: {
      const Rational& z = binding.get("z");
      if (z.is_zero()) throw std::invalid_argument("classical Sylvester requires z != 0");
      Rational f = f_eval_scalar(PhiSpec::classical_f({mn, z}, {}, Rational(-1) / z));
      return z.pow(n) / rising_factorial(Rational(1), n) * f;
    }
    case FamilyId::cCesaro: {
      long s = binding.get_int("s");
      if (s < 0) throw std::invalid_argument("classical Cesaro requires s >= 0");
      Rational f = f_eval_scalar(
          PhiSpec::classical_f({mn, Rational(1)}, {Rational(-s - n)}, binding.get("z")));
      return rising_factorial(Rational(1 + s), n) / rising_factorial(Rational(1), n) * f;
    }
    default:
      throw std::invalid_argument("not a classical family");
  }
}

std::vector<Rational> c_batemanz_poly_coeffs(long m) {
  std::vector<Rational> coeffs;
  Rational c(1);
  for (long k = 0; k <= m; ++k) {
    coeffs.push_back(c);
    Rational den = Rational(k + 1) * Rational(k + 1) * Rational(k + 1);
    c *= Rational(-m + k) * Rational(m + 1 + k) / den;
  }
  return coeffs;
}

std::vector<Rational> cesaro_poly_coeffs(long ell, long s) {
  // (1+s)_ell/ell! * 2F1(-ell, 1; -s-ell; x) unrolled in x
  std::vector<Rational> coeffs;
  Rational lead = rising_factorial(Rational(1 + s), ell) / rising_factorial(Rational(1), ell);
  Rational c = lead;
  for (long k = 0; k <= ell; ++k) {
    coeffs.push_back(c);
    if (k == ell) break;  // the next ratio would divide by -s at k = ell
    c *= Rational(-ell + k) * Rational(1 + k) / (Rational(-s - ell + k) * Rational(k + 1));
  }
  return coeffs;
}

std::vector<Rational> legendre_coeffs(long m) {
  if (m < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<std::vector<Rational>> P = {{Rational(1)}, {Rational(0), Rational(1)}};
  for (long k = 1; k < m; ++k) {
    // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
    std::vector<Rational> next(k + 2, Rational(0));
    for (long i = 0; i <= k; ++i) next[i + 1] = Rational(2 * k + 1) * P[k][i];
    for (long i = 0; i < k; ++i) next[i] -= Rational(k) * P[k - 1][i];
    for (auto& c : next) c /= Rational(k + 1);
    P.push_back(next);
  }
  return P[std::min<long>(m, static_cast<long>(P.size()) - 1)];
}

Rational legendre_value(long n, const Rational& x) {
  Rational val(0);
  Rational xp(1);
  for (const auto& c : legendre_coeffs(n)) {
    val += c * xp;
    xp *= x;
  }
  return val;
}

Rational jacobi_value(long n, const Rational& alpha, const Rational& beta, const Rational& x) {
  Rational f = f_eval_scalar(PhiSpec::classical_f(
      {Rational(-n), Rational(n) + alpha + beta + Rational(1)}, {alpha + Rational(1)},
      (Rational(1) - x) / Rational(2)));
  return rising_factorial(alpha + Rational(1), n) / rising_factorial(Rational(1), n) * f;
}

Rational laguerre_value(long n, const Rational& alpha, const Rational& x) {
  // sum_k (-1)^k binom(n+alpha, n-k) x^k / k!
  Rational total(0);
  Rational xk(1), kfact(1);
  for (long k = 0; k <= n; ++k) {
    Rational binom(1);
    for (long i = 0; i < n - k; ++i) binom *= alpha + Rational(n - i);
    binom /= rising_factorial(Rational(1), n - k);
    if (k > 0) kfact *= Rational(k);
    total += Rational(k % 2 ? -1 : 1) * binom * xk / kfact;
    xk *= x;
  }
  return total;
}

Rational charlier_value(long n, const Rational& x, const Rational& a) {
  if (a.is_zero()) throw std::invalid_argument("Charlier parameter must be nonzero");
  return f_eval_scalar(
      PhiSpec::classical_f({Rational(-n), -x}, {}, Rational(-1) / a));
}

}  // namespace qident
