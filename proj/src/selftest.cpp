#include "qident/selftest.hpp"

#include <ostream>
#include <random>

#include "qident/hyper.hpp"
#include "qident/limits.hpp"
#include "qident/qcore.hpp"
#include "qident/verify.hpp"

namespace qident {

namespace {

struct Ctx {
  SelftestResult& res;
  int suite_start = 0;

  void begin() { suite_start = res.checks; }
  int suite_checks() const { return res.checks - suite_start; }
  void check(bool cond, const std::string& what) {
    ++res.checks;
    if (!cond) res.failures.push_back(what);
  }
};

Series random_series(std::mt19937_64& rng, int order) {
  Series s(order);
  for (int k = 0; k <= order; ++k) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 9);
    s.at(k) = Rational(num, den);
  }
  return s;
}

bool same(const Series& f, const Series& g) {
  return equal_to_order(f, g, std::min(f.order(), g.order())).equal;
}

void suite_series(Ctx& c) {
  std::mt19937_64 rng(7);
  const int N = 12;
  for (int round = 0; round < 4; ++round) {
    Series f = random_series(rng, N), g = random_series(rng, N), h = random_series(rng, N);
    c.check(same((f + g) * h, f * h + g * h), "series: distributivity");
    c.check(same((f * g) * h, f * (g * h)), "series: associativity");
    c.check(same(f * g, g * f), "series: commutativity");
    f.at(0) = Rational(1 + round);
    c.check(same(f * f.reciprocal(), Series::constant(Rational(1), N)),
            "series: reciprocal inverts");
  }
  // 1/(1-x) composed with t/(1+t) collapses to 1 + t
  Series geo = Series::constant(Rational(0), N);
  for (int k = 0; k <= N; ++k) geo.at(k) = Rational(1);
  Series inner = Series::monomial(Rational(1), 1, N) *
                 (Series::constant(Rational(1), N) + Series::monomial(Rational(1), 1, N))
                     .reciprocal();
  Series expect = Series::constant(Rational(1), N);
  expect.at(1) = Rational(1);
  c.check(same(compose(geo, inner), expect), "series: composition 1/(1-x) at t/(1+t)");
  // polynomial evaluation at a unit-constant series
  Series one_plus_t = expect;
  Series sq = Series::eval_poly({Rational(0), Rational(0), Rational(1)}, one_plus_t);
  c.check(same(sq, one_plus_t * one_plus_t), "series: eval_poly squares");
  c.check(Series::monomial(Rational(5), 9, 4).coeff(4).is_zero(),
          "series: monomial beyond order is zero");
}

void suite_qcore(Ctx& c) {
  const QBase base(Rational(1, 2));  // q = 1/4
  const QBase base2(base.q);         // base with q' = q^2
  const Rational a(2, 3);
  for (long n = 0; n <= 8; ++n)
    c.check(qpoch_scalar(a, n + 1, base) ==
                qpoch_scalar(a, n, base) * (Rational(1) - a * base.q_pow(n)),
            "qcore: Pochhammer shift");
  // (q^{-n};q)_k = (q;q)_n / (q;q)_{n-k} (-1)^k q^{k(k-1)/2 - nk}
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k) {
      Rational lhs = qpoch_scalar(base.q_pow(-n), k, base);
      Rational rhs = qpoch_scalar(base.q, n, base) / qpoch_scalar(base.q, n - k, base) *
                     Rational(k % 2 ? -1 : 1) * base.q_pow(k * (k - 1) / 2 - n * k);
      c.check(lhs == rhs, "qcore: inverse-power Pochhammer rewrite");
    }
  // (a;q)_{2n} = (a;q^2)_n (aq;q^2)_n
  for (long n = 0; n <= 6; ++n)
    c.check(qpoch_scalar(a, 2 * n, base) ==
                qpoch_scalar(a, n, base2) * qpoch_scalar(a * base.q, n, base2),
            "qcore: even/odd splitting");
  // coefficients of 1/(t;q)_{s+1} are the Gaussian binomials [s+k, s]
  for (long s = 0; s <= 4; ++s) {
    Series r = qpoch_finite_in_t(Rational(1), s + 1, base, 10).reciprocal();
    for (int k = 0; k <= 10; ++k)
      c.check(r.coeff(k) == q_binomial(s + k, k, base), "qcore: q-binomial series");
  }
  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= n; ++k) {
      c.check(q_binomial(n, k, base) == q_binomial(n, n - k, base), "qcore: symmetry");
      if (k >= 1 && k <= n - 1)
        c.check(q_binomial(n, k, base) == q_binomial(n - 1, k - 1, base) +
                                              base.q_pow(k) * q_binomial(n - 1, k, base),
                "qcore: Pascal recurrence");
    }
  for (long j = 0; j <= 4; ++j)
    c.check(same(qpoch_lambda_series(Rational(3, 5), base.q_pow(j), base, 10),
                 qpoch_finite_in_t(Rational(3, 5), j, base, 10)),
            "qcore: lambda series at integer exponent is finite");
  c.check(same(qpoch_inf_series(a, base, 12) * qpoch_inf_reciprocal_series(a, base, 12),
               Series::constant(Rational(1), 12)),
          "qcore: infinite product inverts");
  c.check(q_number(3, base) == Rational(1) + base.q + base.q_pow(2), "qcore: [3]_q");
  c.check(q_factorial(3, base) == q_number(1, base) * q_number(2, base) * q_number(3, base),
          "qcore: [3]_q!");
}

void suite_hyper(Ctx& c) {
  const QBase base(Rational(1, 2));
  // q-Chu-Vandermonde: 2phi1(q^{-n}, b; c; q, c q^n / b) = (c/b;q)_n/(c;q)_n
  const Rational b(2, 3), cc(3, 7);
  for (long n = 0; n <= 6; ++n) {
    PhiSpec spec = PhiSpec::basic(base, {ParamAtom::scalar(base.q_pow(-n)), ParamAtom::scalar(b)},
                                  {ParamAtom::scalar(cc)},
                                  ParamAtom::scalar(cc * base.q_pow(n) / b));
    c.check(phi_eval_scalar(spec) ==
                qpoch_scalar(cc / b, n, base) / qpoch_scalar(cc, n, base),
            "hyper: q-Chu-Vandermonde");
    // scalar-argument series evaluation agrees with the scalar path
    Series s = phi_series(spec, 4);
    c.check(s.coeff(0) == phi_eval_scalar(spec) && s.coeff(1).is_zero(),
            "hyper: scalar argument collapses to a constant series");
  }
  // classical Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n/(c)_n
  const Rational fb(1, 3), fc(5, 2);
  for (long n = 0; n <= 6; ++n) {
    PhiSpec spec = PhiSpec::classical_f({Rational(-n), fb}, {fc}, Rational(1));
    c.check(f_eval_scalar(spec) == rising_factorial(fc - fb, n) / rising_factorial(fc, n),
            "hyper: Chu-Vandermonde");
  }
  // conjugate-pair product equals a finite base-q^2 product in t
  const QBase base2(base.q);
  for (long k = 0; k <= 5; ++k)
    c.check(same(qpoch_pair(Rational(3, 4), k, base, 8),
                 qpoch_finite_in_t(Rational(9, 16), k, base2, 8)),
            "hyper: pair atoms square to base q^2");
  // (a)_{m+n} = (a)_m (a+m)_n
  const Rational ra(5, 7);
  for (long m = 0; m <= 5; ++m)
    for (long n = 0; n <= 5; ++n)
      c.check(rising_factorial(ra, m + n) ==
                  rising_factorial(ra, m) * rising_factorial(ra + Rational(m), n),
              "hyper: rising factorial splitting");
  // geometric coefficient list through formal composition
  Series t = Series::monomial(Rational(1), 1, 8);
  Series geo = f_series(PhiSpec::classical_f({Rational(1)}, {}), t, 8);
  for (int k = 0; k <= 8; ++k)
    c.check(geo.coeff(k) == Rational(1), "hyper: 1F0(1) is geometric");
}

void suite_families(Ctx& c) {
  ParamBinding qb;
  qb.set("p", Rational(1, 2));  // q = 1/4
  const QBase base(Rational(1, 2));

  qb.set("z", Rational(1));
  c.check(q_family_value(FamilyId::qZ, 1, qb) == Rational(8, 3), "families: qZ(1) frozen");
  c.check(q_family_value(FamilyId::qZ, 2, qb) == Rational(3179, 960), "families: qZ(2) frozen");

  qb.set("a", Rational(1, 3));
  c.check(q_family_value(FamilyId::qB, 1, qb) == Rational(-1, 9), "families: qB(1) frozen");
  c.check(q_family_value(FamilyId::qB, 2, qb) == Rational(-671, 4320), "families: qB(2) frozen");

  qb.set("b", Rational(1, 3));
  qb.set("mu", Rational(3, 5));
  c.check(q_family_value(FamilyId::qPasternack, 2, qb) == Rational(-3403, 3072),
          "families: qPasternack(2) frozen");

  ParamBinding syl;
  syl.set("p", Rational(1, 2));
  syl.set("z", Rational(2));
  syl.set("Z", Rational(1, 3));
  c.check(q_family_value(FamilyId::qSylvester, 2, syl) == Rational(3616, 405),
          "families: qSylvester(2) frozen");

  ParamBinding ces;
  ces.set("p", Rational(1, 2));
  ces.set("s", Rational(1));
  ces.set("z", Rational(1));
  c.check(q_family_value(FamilyId::qCesaro, 1, ces) == Rational(3, 2),
          "families: qCesaro(1) frozen");
  c.check(cesaro_closed_form(3, 1, Rational(1, 2), base) == Rational(775, 512),
          "families: Cesaro closed form frozen");
  // closed form agrees with the hypergeometric definition
  ces.set("z", Rational(1, 2));
  for (long n = 0; n <= 6; ++n)
    c.check(q_family_value(FamilyId::qCesaro, n, ces) ==
                cesaro_closed_form(n, 1, Rational(1, 2), base),
            "families: Cesaro closed form agreement");

  const Rational lat10[] = {Rational(1), Rational(6), Rational(29, 4), Rational(121, 16)};
  const Rational lat21[] = {Rational(1), Rational(22), Rational(177, 4), Rational(407, 8)};
  for (long n = 0; n <= 3; ++n) {
    c.check(qpasternack_lattice_value(1, 0, n, base) == lat10[n],
            "families: lattice values m=1 j=0");
    c.check(qpasternack_lattice_value(2, 1, n, base) == lat21[n],
            "families: lattice values m=2 j=1");
  }
  const std::vector<Rational> zc = q_batemanz_poly_coeffs(2, base);
  c.check(zc.size() == 3 && zc[0] == Rational(1) && zc[1] == Rational(35, 16) &&
              zc[2] == Rational(119, 960),
          "families: q-Bateman-Z coefficients frozen");

  ParamBinding cb;
  cb.set("z", Rational(3, 7));
  c.check(classical_family_value(FamilyId::cZ, 2, cb) == Rational(-50, 49),
          "families: cZ(2) frozen");
  cb.set("z", Rational(-5, 2));
  c.check(classical_family_value(FamilyId::cB, 2, cb) == Rational(79, 16),
          "families: cB(2) frozen");
  ParamBinding cp;
  cp.set("m", Rational(1));
  cp.set("z", Rational(1, 3));
  c.check(classical_family_value(FamilyId::cPasternack, 2, cp) == Rational(1, 36),
          "families: cPasternack(2) frozen");
  ParamBinding cs;
  cs.set("z", Rational(2));
  c.check(classical_family_value(FamilyId::cSylvester, 2, cs) == Rational(9),
          "families: cSylvester(2) frozen");
  cs.set("z", Rational(-3, 4));
  c.check(classical_family_value(FamilyId::cSylvester, 3, cs) == Rational(-1, 4),
          "families: cSylvester(3) frozen");
  ParamBinding cc;
  cc.set("s", Rational(2));
  cc.set("z", Rational(3, 7));
  c.check(classical_family_value(FamilyId::cCesaro, 2, cc) == Rational(366, 49),
          "families: cCesaro(2) frozen");

  c.check(laguerre_value(2, Rational(1, 2), Rational(1, 3)) == Rational(79, 72),
          "families: Laguerre frozen");
  c.check(charlier_value(2, Rational(1, 2), Rational(1, 3)) == Rational(-17, 4),
          "families: Charlier frozen");
  c.check(jacobi_value(2, Rational(1, 2), Rational(1, 3), Rational(2, 5)) ==
              Rational(-133, 800),
          "families: Jacobi frozen");
  const std::vector<Rational> p3 = legendre_coeffs(3);
  c.check(p3.size() == 4 && p3[0].is_zero() && p3[1] == Rational(-3, 2) && p3[2].is_zero() &&
              p3[3] == Rational(5, 2),
          "families: Legendre coefficients");
  c.check(legendre_value(3, Rational(3, 2)) == Rational(99, 16), "families: Legendre value");
}

void suite_registry(Ctx& c) {
  c.check(registry().size() == 28, "registry: 28 identities");
  // Q-GF-3.10 at L = q collapses to Q-GF-3.9 on both sides
  ParamBinding b10;
  b10.set("p", Rational(1, 2));
  b10.set("m", Rational(2));
  b10.set("j", Rational(1));
  b10.set("L", Rational(1, 4));
  ParamBinding b9;
  b9.set("p", Rational(1, 2));
  b9.set("m", Rational(2));
  b9.set("j", Rational(1));
  c.check(same(build_lhs("Q-GF-3.10", b10, 10), build_lhs("Q-GF-3.9", b9, 10)),
          "registry: weighted lattice LHS collapses at L = q");
  c.check(same(build_rhs("Q-GF-3.10", b10, 10), build_rhs("Q-GF-3.9", b9, 10)),
          "registry: weighted lattice RHS collapses at L = q");
  // Q-GF-3.4 at mu = q, b = a collapses to Q-GF-3.2 on both sides
  ParamBinding b4;
  b4.set("p", Rational(1, 2));
  b4.set("b", Rational(2, 7));
  b4.set("mu", Rational(1, 4));
  ParamBinding b2;
  b2.set("p", Rational(1, 2));
  b2.set("a", Rational(2, 7));
  c.check(same(build_lhs("Q-GF-3.4", b4, 10), build_lhs("Q-GF-3.2", b2, 10)),
          "registry: Pasternack LHS collapses at mu = q");
  c.check(same(build_rhs("Q-GF-3.4", b4, 10), build_rhs("Q-GF-3.2", b2, 10)),
          "registry: Pasternack RHS collapses at mu = q");
  // identity lookups
  c.check(find_identity("Q-GF-2.1") != nullptr && find_identity("nope") == nullptr,
          "registry: lookup");
  // sampled bindings satisfy their schemas
  for (const IdentitySpec& spec : registry()) {
    for (std::uint64_t seed : {1ull, 2ull}) {
      ParamBinding fb = sample_binding(spec.id, seed, RunMode::Free);
      bool ok = true;
      try {
        check_binding(spec, fb);
      } catch (...) {
        ok = false;
      }
      c.check(ok, "registry: sampled binding satisfies schema for " + spec.id);
      if (spec.q_identity) {
        ParamBinding cb = sample_binding(spec.id, seed, RunMode::Consistent);
        bool ok2 = true;
        try {
          check_binding(spec, cb);
        } catch (...) {
          ok2 = false;
        }
        c.check(ok2, "registry: consistent binding satisfies schema for " + spec.id);
      }
    }
  }
}

void suite_limits(Ctx& c) {
  // cheap smoke: the n = 2 factorial limit at reduced precision; 8 steps
  // reach q = 1 - 2^{-11}, comfortably inside the 1e-3 tolerance
  LimitReport r = limit_check("LIM-FACT", limit_default_binding("LIM-FACT"), 96, 8);
  c.check(r.passed, "limits: factorial smoke check");
  c.check(r.steps.size() == 8, "limits: requested step count");
  bool threw = false;
  try {
    limit_check("LIM-FACT", limit_default_binding("LIM-FACT"), 32, 4);
  } catch (const std::exception&) {
    threw = true;
  }
  c.check(threw, "limits: precision floor enforced");
}

}  // namespace

SelftestResult run_selftest(std::ostream& os) {
  SelftestResult res;
  Ctx c{res};
  struct Suite {
    const char* name;
    void (*fn)(Ctx&);
  };
  const Suite suites[] = {
      {"series", suite_series},   {"qcore", suite_qcore},       {"hyper", suite_hyper},
      {"families", suite_families}, {"registry", suite_registry}, {"limits", suite_limits},
  };
  for (const Suite& s : suites) {
    c.begin();
    int before = static_cast<int>(res.failures.size());
    s.fn(c);
    int bad = static_cast<int>(res.failures.size()) - before;
    os << "suite " << s.name << ": " << c.suite_checks() << " checks, " << bad << " failures\n";
  }

  c.begin();
  int before = static_cast<int>(res.failures.size());
  VerifySummary sum = verify_all(42, 5, 16, ModeSelect::Both);
  c.check(sum.failed == 0 && sum.errors == 0,
          "verification: seeded full registry run has failures");
  int bad = static_cast<int>(res.failures.size()) - before;
  os << "suite verification: " << sum.total << " identity runs, "
     << (sum.failed + sum.errors) << " failures" << (bad ? " (unexpected)" : "") << "\n";

  for (const std::string& f : res.failures) os << "FAILED: " << f << "\n";
  return res;
}

}  // namespace qident
