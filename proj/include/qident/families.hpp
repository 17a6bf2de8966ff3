#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qident/hyper.hpp"
#include "qident/qcore.hpp"
#include "qident/rational.hpp"

namespace qident {

/// Named rational parameters (p, a, Z, L, mu, b, z, lambda, m, j, s, n, ell)
/// with insertion order preserved for deterministic rendering.
class ParamBinding {
public:
  bool has(const std::string& name) const;
  const Rational& get(const std::string& name) const;  // throws if absent
  long get_int(const std::string& name) const;         // requires an integer value
  void set(const std::string& name, const Rational& value);

  const std::vector<std::pair<std::string, Rational>>& entries() const { return kv_; }

private:
  std::vector<std::pair<std::string, Rational>> kv_;
};

enum class FamilyId {
  qZ,
  qB,
  qPasternack,
  qSylvester,
  qCesaro,
  cZ,
  cB,
  cPasternack,
  cSylvester,
  cCesaro,
};

/// CLI spelling: q-batemanz, q-bateman, q-pasternack, q-sylvester, q-cesaro,
/// classical-batemanz, classical-bateman, classical-pasternack,
/// classical-sylvester, classical-cesaro.
std::optional<FamilyId> family_from_cli(const std::string& name);
std::string family_cli_name(FamilyId family);
bool family_is_classical(FamilyId family);
/// Parameter names required by a family beyond the degree n.
std::vector<std::string> family_param_names(FamilyId family);

/// Degree-n member of a q-family.  Required binding entries:
///   qZ: p, z       — 2phi2(q^{-n}, q^{n+1}; q, q; q, q^n z)
///   qB: p, a       — 3phi2(q^{-n}, q^{n+1}, a; q, q; q, q^n)
///   qPasternack: p, b, mu — 3phi2(q^{-n}, q^{n+1}, b; q, mu; q, q^n)
///   qSylvester: p, z (nonzero), Z — z^n/(q;q)_n 2phi0(q^{-n}, Z; -; q, q^n/z)
///   qCesaro: p, s (integer >= 0), z — (q^{s+1};q)_n/(q;q)_n
///                                      2phi1(q^{-n}, q; q^{-s-n}; q, z)
Rational q_family_value(FamilyId family, long n, const ParamBinding& binding);

/// Value of the degree-m q-Pasternack member with parameter j on the
/// lattice z = -2n-1-j: 3phi2(q^{-m}, q^{m+1}, q^{-n}; q, q^{j+1}; q, q^n).
/// The phi argument follows the lattice index n, matching the expansion
/// under which the lattice generating functions hold.
Rational qpasternack_lattice_value(long m, long j, long n, const QBase& base);

/// Coefficients (in the argument) of the degree-m q-Bateman-Z polynomial.
std::vector<Rational> q_batemanz_poly_coeffs(long m, const QBase& base);

/// sum_{k=0..n} qbinom(k+s, s) (z q^s)^{n-k}.
Rational cesaro_closed_form(long n, long s, const Rational& z, const QBase& base);

/// Degree-n member of a classical family.  Required binding entries:
///   cZ: z          — 2F2(-n, n+1; 1, 1; z)
///   cB: z          — 3F2(-n, n+1, (z+1)/2; 1, 1; 1)
///   cPasternack: m (rational, != -1), z — 3F2(-n, n+1, (z+m+1)/2; 1, m+1; 1)
///   cSylvester: z (nonzero) — z^n/n! 2F0(-n, z; -; -1/z)
///   cCesaro: s (integer >= 0), z — (1+s)_n/n! 2F1(-n, 1; -s-n; z)
Rational classical_family_value(FamilyId family, long n, const ParamBinding& binding);

/// Coefficients (in the argument) of the degree-m classical Bateman-Z
/// polynomial 2F2(-m, m+1; 1, 1; x).
std::vector<Rational> c_batemanz_poly_coeffs(long m);

/// Coefficients (in the argument) of the classical Cesaro polynomial
/// g_ell^{(s)}.
std::vector<Rational> cesaro_poly_coeffs(long ell, long s);

std::vector<Rational> legendre_coeffs(long m);
Rational legendre_value(long n, const Rational& x);
Rational jacobi_value(long n, const Rational& alpha, const Rational& beta, const Rational& x);
Rational laguerre_value(long n, const Rational& alpha, const Rational& x);
Rational charlier_value(long n, const Rational& x, const Rational& a);

}  // namespace qident
