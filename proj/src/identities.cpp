#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qident/hyper.hpp"
#include "qident/qcore.hpp"
#include "qident/verify.hpp"

namespace qident {

namespace {

using Atom = ParamAtom;

// ---- schema shorthands ----
ParamSpec p_base() { return {"p", false, SampleKind::Base, "rational in (0,1); q = p^2"}; }
ParamSpec p_free(const std::string& name) {
  return {name, false, SampleKind::FreeParam, "nonzero rational"};
}
ParamSpec p_mu() { return {"mu", false, SampleKind::MuParam, "nonzero rational, mu != q^{-i}"}; }
ParamSpec p_zany() { return {"z", false, SampleKind::RatAny, "rational"}; }
ParamSpec p_znz() { return {"z", false, SampleKind::RatNonzero, "nonzero rational"}; }
ParamSpec p_int6(const std::string& name) {
  return {name, true, SampleKind::Int06, "integer >= 0"};
}
ParamSpec p_ell() { return {"ell", true, SampleKind::Int03, "integer >= 0"}; }
ParamSpec p_lambda() { return {"lambda", false, SampleKind::LambdaRat, "nonzero rational"}; }

// ---- small builder helpers ----
Series sum_over_n(int N, const std::function<Rational(long)>& term) {
  Series s(N);
  for (int n = 0; n <= N; ++n) s.at(n) = term(n);
  return s;
}

// c0 + c1 t
Series linear(const Rational& c0, const Rational& c1, int N) {
  Series s = Series::constant(c0, N);
  if (N >= 1) s.at(1) = c1;
  return s;
}

// e^{ct}
Series exp_series(const Rational& c, int N) {
  Series s(N);
  Rational term(1);
  s.at(0) = term;
  for (int n = 1; n <= N; ++n) {
    term *= c / Rational(n);
    s.at(n) = term;
  }
  return s;
}

// (1 - ct)^{-lambda}, coefficient (lambda)_n c^n / n!
Series binomial_series(const Rational& lambda, const Rational& c, int N) {
  Series s(N);
  Rational term(1);
  s.at(0) = term;
  for (int n = 1; n <= N; ++n) {
    term *= (lambda + Rational(n - 1)) * c / Rational(n);
    s.at(n) = term;
  }
  return s;
}

Rational binom_rat(long n, long k) {
  return rising_factorial(Rational(n - k + 1), k) / rising_factorial(Rational(1), k);
}

Rational factorial_rat(long n) { return rising_factorial(Rational(1), n); }

// ---- consistent-mode draws ----
long rand_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}
long rand_odd(std::mt19937_64& rng) { return 2 * rand_range(rng, -4, 3) + 1; }

// a = p^{z+1} for an odd lattice argument z
void couple_bateman(ParamBinding& b, std::mt19937_64& rng) {
  long z = rand_odd(rng);
  b.set("a", b.get("p").pow(z + 1));
  b.set("z", Rational(z));
}

// ---- the registry ----
std::vector<IdentitySpec> build_registry() {
  std::vector<IdentitySpec> reg;

  {
    IdentitySpec s;
    s.id = "Q-GF-2.1";
    s.description = "q-binomial theorem: sum_n (a;q)_n t^n/(q;q)_n = (at;q)_inf/(t;q)_inf";
    s.schema = {p_base(), p_free("a")};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const Rational a = b.get("a");
      Series out(N);
      Rational num(1), den(1);
      for (int n = 0; n <= N; ++n) {
        if (n > 0) {
          num *= Rational(1) - a * base.q_pow(n - 1);
          den *= Rational(1) - base.q_pow(n);
        }
        out.at(n) = num / den;
      }
      return out;
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      return qpoch_inf_series(b.get("a"), base, N) *
             qpoch_inf_reciprocal_series(Rational(1), base, N);
    };
    s.consistent_sampler = couple_bateman;
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-GF-3.1";
    s.description = "generating function of the q-Bateman-Z family";
    s.schema = {p_base(), p_zany()};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N, [&](long n) { return q_family_value(FamilyId::qZ, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const Rational p = base.p, q = base.q;
      Series pref = qpoch_finite_in_t(Rational(1), 1, base, N).reciprocal();
      PhiSpec spec = PhiSpec::basic(
          base, {Atom::scalar(-q), Atom::scalar(p), Atom::scalar(-p), Atom::zero()},
          {Atom::scalar(q), Atom::pair(q), Atom::pair(p)}, Atom::linear_t(b.get("z")));
      return pref * phi_series(spec, N);
    };
    s.consistent_sampler = [](ParamBinding& b, std::mt19937_64& rng) {
      b.set("z", Rational(rand_odd(rng)));
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-GF-3.2";
    s.description = "generating function of the q-Bateman family";
    s.schema = {p_base(), p_free("a")};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N, [&](long n) { return q_family_value(FamilyId::qB, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const Rational p = base.p, q = base.q;
      Series pref = qpoch_finite_in_t(Rational(1), 1, base, N).reciprocal();
      PhiSpec spec = PhiSpec::basic(
          base,
          {Atom::scalar(-q), Atom::scalar(p), Atom::scalar(-p), Atom::scalar(b.get("a")),
           Atom::zero()},
          {Atom::scalar(q), Atom::pair(p), Atom::pair(q)}, Atom::linear_t(Rational(1)));
      return pref * phi_series(spec, N);
    };
    s.consistent_sampler = couple_bateman;
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-GF-3.3";
    s.description = "generating function of first differences of the q-Bateman family";
    s.schema = {p_base(), p_free("a")};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      ParamBinding shifted = b;
      shifted.set("a", b.get("a") / base.q);
      return sum_over_n(N, [&](long n) {
        return q_family_value(FamilyId::qB, n, shifted) - q_family_value(FamilyId::qB, n, b);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const Rational a = b.get("a"), q = base.q;
      const Rational p3 = base.half_pow(3), q2 = base.q_pow(2);
      Series pref = Series::monomial(a / q * (Rational(1) + q), 1, N) *
                    qpoch_finite_in_t(Rational(1), 3, base, N).reciprocal();
      PhiSpec spec = PhiSpec::basic(
          base,
          {Atom::scalar(-q2), Atom::scalar(p3), Atom::scalar(-p3), Atom::scalar(a), Atom::zero()},
          {Atom::scalar(q2), Atom::pair(p3), Atom::pair(q2)}, Atom::linear_t(q));
      return pref * phi_series(spec, N);
    };
    s.consistent_sampler = couple_bateman;
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-GF-3.4";
    s.description = "generating function of the q-Pasternack family";
    s.schema = {p_base(), p_free("b"), p_mu()};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N, [&](long n) { return q_family_value(FamilyId::qPasternack, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const Rational p = base.p, q = base.q;
      Series pref = qpoch_finite_in_t(Rational(1), 1, base, N).reciprocal();
      PhiSpec spec = PhiSpec::basic(
          base,
          {Atom::scalar(-q), Atom::scalar(p), Atom::scalar(-p), Atom::scalar(b.get("b")),
           Atom::zero()},
          {Atom::scalar(b.get("mu")), Atom::pair(p), Atom::pair(q)}, Atom::linear_t(Rational(1)));
      return pref * phi_series(spec, N);
    };
    s.consistent_sampler = [](ParamBinding& b, std::mt19937_64& rng) {
      long z = rand_odd(rng);
      long m = rand_range(rng, 0, 6);
      QBase base(b.get("p"));
      b.set("mu", base.q_pow(m + 1));
      b.set("b", base.p.pow(z + m + 1));
      b.set("z", Rational(z));
      b.set("m", Rational(m));
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-GF-3.6";
    s.description = "exponential-type generating function of the q-Sylvester family";
    s.schema = {p_base(), p_znz(), p_free("Z")};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N, [&](long n) { return q_family_value(FamilyId::qSylvester, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      return qpoch_inf_series(b.get("Z"), base, N) *
             qpoch_inf_reciprocal_series(Rational(1), base, N) *
             qpoch_inf_reciprocal_series(b.get("z"), base, N);
    };
    s.consistent_sampler = [](ParamBinding& b, std::mt19937_64& rng) {
      long z = rand_odd(rng);
      b.set("z", Rational(z));
      b.set("Z", b.get("p").pow(2 * z));
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-GF-3.7";
    s.description = "(L;q)_n-weighted generating function of the q-Sylvester family";
    s.schema = {p_base(), p_znz(), p_free("Z"), p_free("L")};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const Rational L = b.get("L");
      return sum_over_n(N, [&](long n) {
        return qpoch_scalar(L, n, base) * q_family_value(FamilyId::qSylvester, n, b);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const Rational z = b.get("z"), Z = b.get("Z"), L = b.get("L");
      // 1/(zt;q)_lambda with q^lambda = L
      Series pref =
          qpoch_inf_reciprocal_series(z, base, N) * qpoch_inf_series(z * L, base, N);
      PhiSpec spec = PhiSpec::basic(base, {Atom::scalar(L), Atom::scalar(Z)},
                                    {Atom::linear_t(z * L)}, Atom::linear_t(Rational(1)));
      return pref * phi_series(spec, N);
    };
    s.consistent_sampler = [](ParamBinding& b, std::mt19937_64& rng) {
      long z = rand_odd(rng);
      long lambda = rand_range(rng, 1, 6);
      QBase base(b.get("p"));
      b.set("z", Rational(z));
      b.set("Z", base.p.pow(2 * z));
      b.set("L", base.q_pow(lambda));
      b.set("lambda", Rational(lambda));
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-GF-3.8";
    s.description = "generating function of the q-Cesaro family";
    s.schema = {p_base(), p_int6("s"), p_zany()};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N, [&](long n) { return q_family_value(FamilyId::qCesaro, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const long sp = b.get_int("s");
      const Rational zq_s = b.get("z") * base.q_pow(sp);
      return qpoch_finite_in_t(zq_s, 1, base, N).reciprocal() *
             qpoch_finite_in_t(Rational(1), sp + 1, base, N).reciprocal();
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-GF-3.9";
    s.description = "lattice generating function of the q-Pasternack family";
    s.schema = {p_base(), p_int6("m"), p_int6("j")};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const long m = b.get_int("m"), j = b.get_int("j");
      return sum_over_n(N, [&](long n) { return qpasternack_lattice_value(m, j, n, base); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const long m = b.get_int("m"), j = b.get_int("j");
      Series pref = qpoch_finite_in_t(Rational(1), 1, base, N).reciprocal();
      PhiSpec spec =
          PhiSpec::basic(base, {Atom::scalar(base.q_pow(-m)), Atom::scalar(base.q_pow(m + 1))},
                         {Atom::scalar(base.q_pow(j + 1)), Atom::linear_t(base.q)},
                         Atom::linear_t(Rational(1)));
      return pref * phi_series(spec, N);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-GF-3.10";
    s.description = "weighted lattice generating function of the q-Pasternack family";
    s.schema = {p_base(), p_int6("m"), p_int6("j"), p_free("L")};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const long m = b.get_int("m"), j = b.get_int("j");
      const Rational L = b.get("L");
      return sum_over_n(N, [&](long n) {
        return qpoch_scalar(L, n, base) / qpoch_scalar(base.q, n, base) *
               qpasternack_lattice_value(m, j, n, base);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const long m = b.get_int("m"), j = b.get_int("j");
      const Rational L = b.get("L");
      // 1/(t;q)_lambda with q^lambda = L
      Series pref =
          qpoch_inf_reciprocal_series(Rational(1), base, N) * qpoch_inf_series(L, base, N);
      PhiSpec spec = PhiSpec::basic(
          base,
          {Atom::scalar(base.q_pow(-m)), Atom::scalar(base.q_pow(m + 1)), Atom::scalar(L)},
          {Atom::scalar(base.q), Atom::scalar(base.q_pow(j + 1)), Atom::linear_t(L)},
          Atom::linear_t(Rational(1)));
      return pref * phi_series(spec, N);
    };
    s.consistent_sampler = [](ParamBinding& b, std::mt19937_64& rng) {
      long lambda = rand_range(rng, 1, 6);
      b.set("L", QBase(b.get("p")).q_pow(lambda));
      b.set("lambda", Rational(lambda));
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-GF-3.11";
    s.description = "1/(q;q)_n-weighted lattice generating function at j = 0";
    s.schema = {p_base(), p_int6("m")};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const long m = b.get_int("m");
      return sum_over_n(N, [&](long n) {
        return qpasternack_lattice_value(m, 0, n, base) / qpoch_scalar(base.q, n, base);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const long m = b.get_int("m");
      Series arg = Series::monomial(base.q_pow(-m), 1, N);
      return qpoch_inf_reciprocal_series(Rational(1), base, N) *
             Series::eval_poly(q_batemanz_poly_coeffs(m, base), arg);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-REM";
    s.description = "q-Pasternack at mu = q reduces to the q-Bateman family";
    s.schema = {p_base(), p_free("a")};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      ParamBinding pb;
      pb.set("p", base.p);
      pb.set("b", b.get("a"));
      pb.set("mu", base.q);
      return sum_over_n(N, [&](long n) { return q_family_value(FamilyId::qPasternack, n, pb); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N, [&](long n) { return q_family_value(FamilyId::qB, n, b); });
    };
    s.consistent_sampler = couple_bateman;
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "Q-QCP";
    s.description = "q-Cesaro hypergeometric form equals its q-binomial closed form";
    s.schema = {p_base(), p_int6("s"), p_zany()};
    s.q_identity = true;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N, [&](long n) { return q_family_value(FamilyId::qCesaro, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      QBase base(b.get("p"));
      const long sp = b.get_int("s");
      const Rational z = b.get("z");
      return sum_over_n(N, [&](long n) { return cesaro_closed_form(n, sp, z, base); });
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-GF-Z";
    s.description = "generating function of the classical Bateman-Z family";
    s.schema = {p_zany()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N, [&](long n) { return classical_family_value(FamilyId::cZ, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const Rational z = b.get("z");
      Series omt = linear(Rational(1), Rational(-1), N);
      Series inner = (Rational(-4) * z) *
                     (Series::monomial(Rational(1), 1, N) * (omt * omt).reciprocal());
      return omt.reciprocal() *
             f_series(PhiSpec::classical_f({Rational(1, 2)}, {Rational(1)}), inner, N);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-GF-B1";
    s.description = "generating function of the classical Bateman family";
    s.schema = {p_zany()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N, [&](long n) { return classical_family_value(FamilyId::cB, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const Rational w = (b.get("z") + Rational(1)) / Rational(2);
      Series omt = linear(Rational(1), Rational(-1), N);
      Series inner =
          Rational(-4) * (Series::monomial(Rational(1), 1, N) * (omt * omt).reciprocal());
      return omt.reciprocal() *
             f_series(PhiSpec::classical_f({Rational(1, 2), w}, {Rational(1)}), inner, N);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-GF-B2";
    s.description = "generating function of classical Bateman first differences";
    s.schema = {p_zany()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      const Rational z = b.get("z");
      ParamBinding shifted;
      shifted.set("z", z - Rational(2));
      return sum_over_n(N, [&](long n) {
        return classical_family_value(FamilyId::cB, n, shifted) -
               classical_family_value(FamilyId::cB, n, b);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const Rational w = (b.get("z") + Rational(1)) / Rational(2);
      Series omt = linear(Rational(1), Rational(-1), N);
      Series inner =
          Rational(-4) * (Series::monomial(Rational(1), 1, N) * (omt * omt).reciprocal());
      Series pref = Rational(2) * (Series::monomial(Rational(1), 1, N) *
                                   (omt * omt * omt).reciprocal());
      return pref *
             f_series(PhiSpec::classical_f({Rational(3, 2), w}, {Rational(2)}), inner, N);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-GF-SYL1";
    s.description = "exponential generating function of the classical Sylvester family";
    s.schema = {p_znz()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N,
                        [&](long n) { return classical_family_value(FamilyId::cSylvester, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const Rational z = b.get("z");
      // e^{zt} (1-t)^{-z}
      return exp_series(z, N) * binomial_series(z, Rational(1), N);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-GF-SYL2";
    s.description = "(lambda)_n-weighted generating function of the classical Sylvester family";
    s.schema = {p_znz(), p_lambda()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      const Rational lambda = b.get("lambda");
      return sum_over_n(N, [&](long n) {
        return rising_factorial(lambda, n) * classical_family_value(FamilyId::cSylvester, n, b);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const Rational z = b.get("z"), lambda = b.get("lambda");
      Series inner =
          Series::monomial(Rational(1), 1, N) * linear(Rational(1), -z, N).reciprocal();
      return binomial_series(lambda, z, N) *
             f_series(PhiSpec::classical_f({lambda, z}, {}), inner, N);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-GF-CES1";
    s.description = "generating function of the classical Cesaro family";
    s.schema = {p_int6("s"), p_zany()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N,
                        [&](long n) { return classical_family_value(FamilyId::cCesaro, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const Rational z = b.get("z");
      const long sp = b.get_int("s");
      return binomial_series(Rational(sp + 1), Rational(1), N) *
             linear(Rational(1), -z, N).reciprocal();
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-GF-CES2";
    s.description = "shifted binomial-weighted generating function of the classical Cesaro family";
    s.schema = {p_int6("s"), p_zany(), p_ell()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      const long ell = b.get_int("ell");
      return sum_over_n(N, [&](long n) {
        return binom_rat(n + ell, ell) * classical_family_value(FamilyId::cCesaro, n + ell, b);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const Rational z = b.get("z");
      const long sp = b.get_int("s"), ell = b.get_int("ell");
      Series omzt_inv = linear(Rational(1), -z, N).reciprocal();
      Series w = z * (linear(Rational(1), Rational(-1), N) * omzt_inv);
      return binomial_series(Rational(sp + ell + 1), Rational(1), N) * omzt_inv *
             Series::eval_poly(cesaro_poly_coeffs(ell, sp), w);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-L-1.1";
    s.description = "exponential lattice generating function of the classical Bateman family";
    s.schema = {p_int6("m")};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      const long m = b.get_int("m");
      return sum_over_n(N, [&](long n) {
        ParamBinding at;
        at.set("z", Rational(-2 * n - 1));
        return classical_family_value(FamilyId::cB, m, at) / factorial_rat(n);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const long m = b.get_int("m");
      Series arg = Series::monomial(Rational(-1), 1, N);
      return exp_series(Rational(1), N) * Series::eval_poly(c_batemanz_poly_coeffs(m), arg);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-COR-1";
    s.description = "Legendre form of the classical Bateman lattice generating function";
    s.schema = {p_int6("m")};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      const long m = b.get_int("m");
      return sum_over_n(N, [&](long n) {
        ParamBinding at;
        at.set("z", Rational(-2 * n - 1));
        return classical_family_value(FamilyId::cB, m, at);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const long m = b.get_int("m");
      Series omt_inv = linear(Rational(1), Rational(-1), N).reciprocal();
      Series arg = linear(Rational(1), Rational(1), N) * omt_inv;
      return omt_inv * Series::eval_poly(legendre_coeffs(m), arg);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-COR-2";
    s.description = "(lambda)_n-weighted classical Bateman lattice generating function";
    s.schema = {p_int6("m"), p_lambda()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      const long m = b.get_int("m");
      const Rational lambda = b.get("lambda");
      return sum_over_n(N, [&](long n) {
        ParamBinding at;
        at.set("z", Rational(-2 * n - 1));
        return classical_family_value(FamilyId::cB, m, at) * rising_factorial(lambda, n) /
               factorial_rat(n);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const long m = b.get_int("m");
      const Rational lambda = b.get("lambda");
      Series inner = Rational(-1) * (Series::monomial(Rational(1), 1, N) *
                                     linear(Rational(1), Rational(-1), N).reciprocal());
      return binomial_series(lambda, Rational(1), N) *
             f_series(PhiSpec::classical_f({Rational(-m), Rational(m + 1), lambda},
                                           {Rational(1), Rational(1)}),
                      inner, N);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-COR-3";
    s.description = "classical Pasternack lattice generating function";
    s.schema = {p_int6("m"), p_int6("j")};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      const long m = b.get_int("m"), j = b.get_int("j");
      return sum_over_n(N, [&](long n) {
        ParamBinding at;
        at.set("m", Rational(j));
        at.set("z", Rational(-2 * n - 1 - j));
        return classical_family_value(FamilyId::cPasternack, m, at);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const long m = b.get_int("m"), j = b.get_int("j");
      Series omt_inv = linear(Rational(1), Rational(-1), N).reciprocal();
      Series inner = Rational(-1) * (Series::monomial(Rational(1), 1, N) * omt_inv);
      return omt_inv * f_series(PhiSpec::classical_f({Rational(-m), Rational(m + 1)},
                                                     {Rational(j + 1)}),
                                inner, N);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-COR-4";
    s.description = "(lambda)_n-weighted classical Pasternack lattice generating function";
    s.schema = {p_int6("m"), p_int6("j"), p_lambda()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      const long m = b.get_int("m"), j = b.get_int("j");
      const Rational lambda = b.get("lambda");
      return sum_over_n(N, [&](long n) {
        ParamBinding at;
        at.set("m", Rational(j));
        at.set("z", Rational(-2 * n - 1 - j));
        return classical_family_value(FamilyId::cPasternack, m, at) *
               rising_factorial(lambda, n) / factorial_rat(n);
      });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const long m = b.get_int("m"), j = b.get_int("j");
      const Rational lambda = b.get("lambda");
      Series inner = Rational(-1) * (Series::monomial(Rational(1), 1, N) *
                                     linear(Rational(1), Rational(-1), N).reciprocal());
      return binomial_series(lambda, Rational(1), N) *
             f_series(PhiSpec::classical_f({Rational(-m), Rational(m + 1), lambda},
                                           {Rational(1), Rational(j + 1)}),
                      inner, N);
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-CONN-LAG";
    s.description = "Sylvester polynomials as rescaled Laguerre polynomials";
    s.schema = {p_znz()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N,
                        [&](long n) { return classical_family_value(FamilyId::cSylvester, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const Rational z = b.get("z");
      return sum_over_n(N, [&](long n) {
        Rational v = laguerre_value(n, -z - Rational(n), z);
        return n % 2 ? -v : v;
      });
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-CONN-CHA";
    s.description = "Sylvester polynomials as rescaled Charlier polynomials";
    s.schema = {p_znz()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N,
                        [&](long n) { return classical_family_value(FamilyId::cSylvester, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const Rational z = b.get("z");
      return sum_over_n(N, [&](long n) {
        return z.pow(n) / factorial_rat(n) * charlier_value(n, -z, z);
      });
    };
    reg.push_back(std::move(s));
  }

  {
    IdentitySpec s;
    s.id = "C-CONN-JAC";
    s.description = "Cesaro polynomials as specialized Jacobi polynomials";
    s.schema = {p_int6("s"), p_zany()};
    s.q_identity = false;
    s.lhs = [](const ParamBinding& b, int N) {
      return sum_over_n(N,
                        [&](long n) { return classical_family_value(FamilyId::cCesaro, n, b); });
    };
    s.rhs = [](const ParamBinding& b, int N) {
      const long sp = b.get_int("s");
      const Rational z = b.get("z");
      return sum_over_n(N, [&](long n) {
        return jacobi_value(n, Rational(sp + 1), Rational(-sp - n - 1),
                            Rational(2) * z - Rational(1));
      });
    };
    reg.push_back(std::move(s));
  }

  return reg;
}

}  // namespace

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> reg = build_registry();
  return reg;
}

const IdentitySpec* find_identity(const std::string& id) {
  for (const auto& spec : registry())
    if (spec.id == id) return &spec;
  return nullptr;
}

}  // namespace qident
