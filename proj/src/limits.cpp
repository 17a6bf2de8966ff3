#include "qident/limits.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qident/hyper.hpp"

namespace qident {

namespace {

constexpr long kIterGuard = 200000;

BigFloat bf(const Rational& x, mpfr_prec_t prec) { return BigFloat::from(x, prec); }
BigFloat one_bf(mpfr_prec_t prec) { return BigFloat::from_long(1, prec); }

BigFloat step_q(int k, mpfr_prec_t prec) {
  return one_bf(prec) - BigFloat::pow2(-(k + 3), prec);
}

// (a;q)_n
BigFloat qpoch_bf(const BigFloat& a, const BigFloat& q, long n, mpfr_prec_t prec) {
  BigFloat r = one_bf(prec), f = a;
  for (long i = 0; i < n; ++i) {
    r *= one_bf(prec) - f;
    f *= q;
  }
  return r;
}

// terminating 3phi2(q^{-m}, q^{m+1}, q^{-n}; q, q^{j+1}; q, q^n)
BigFloat lattice_value_bf(long m, long j, long n, const BigFloat& q, mpfr_prec_t prec) {
  const BigFloat one = one_bf(prec);
  const BigFloat qn = q.pow_int(n);
  BigFloat term = one, total = one;
  const long kmax = std::min(m, n);
  for (long k = 1; k <= kmax; ++k) {
    BigFloat num = (one - q.pow_int(k - 1 - m)) * (one - q.pow_int(m + k)) *
                   (one - q.pow_int(k - 1 - n));
    BigFloat den = (one - q.pow_int(k)) * (one - q.pow_int(j + k)) * (one - q.pow_int(k));
    term *= num / den * qn;
    total += term;
  }
  return total;
}

void require_small_t(const Rational& t) {
  if (abs(t) > Rational(1, 2))
    throw std::invalid_argument("parameter 't' must satisfy |t| <= 1/2, got " + t.str());
}

long bounded_int(const ParamBinding& binding, const std::string& name, long lo, long hi) {
  long v = binding.get_int(name);
  if (v < lo || v > hi)
    throw std::invalid_argument("parameter '" + name + "' must lie in " + std::to_string(lo) +
                                ".." + std::to_string(hi));
  return v;
}

// classical terminating sum_{k<=m} (-m)_k (m+1)_k / ((1)_k (j+1)_k k!) x^k
Rational bateman_f_sum(long m, long j, const Rational& x) {
  Rational total(0), term(1);
  for (long k = 0; k <= m; ++k) {
    total += term;
    Rational den = (Rational(1) + Rational(k)) * (Rational(j + 1) + Rational(k)) *
                   Rational(k + 1);
    term *= (Rational(-m) + Rational(k)) * (Rational(m + 1) + Rational(k)) / den * x;
  }
  return total;
}

}  // namespace

const std::vector<std::string>& limit_ids() {
  static const std::vector<std::string> ids = {"LIM-FACT", "LIM-EXP", "LIM-PHI22", "LIM-COR-J",
                                               "LIM-L11"};
  return ids;
}

ParamBinding limit_default_binding(const std::string& id) {
  ParamBinding b;
  if (id == "LIM-FACT") {
    b.set("n", Rational(2));
  } else if (id == "LIM-EXP") {
    b.set("t", Rational(1, 2));
  } else if (id == "LIM-PHI22") {
    b.set("a", Rational(1, 2));
    b.set("b", Rational(2));
    b.set("c", Rational(1));
    b.set("d", Rational(3, 2));
    b.set("t", Rational(1, 3));
  } else if (id == "LIM-COR-J") {
    b.set("m", Rational(1));
    b.set("j", Rational(0));
    b.set("t", Rational(1, 4));
  } else if (id == "LIM-L11") {
    b.set("m", Rational(2));
    b.set("t", Rational(1, 3));
  } else {
    throw std::invalid_argument("unknown limit check '" + id + "'");
  }
  return b;
}

LimitReport limit_check(const std::string& id, const ParamBinding& binding, long precision_bits,
                        int steps) {
  if (precision_bits < BigFloat::min_precision)
    throw std::invalid_argument("precision must be at least 64 bits");
  if (steps < 3) throw std::invalid_argument("at least 3 limit steps are required");
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits);
  const BigFloat one = one_bf(prec);
  const BigFloat tail = BigFloat::pow2(-(precision_bits + 10), prec);

  BigFloat target(prec);
  std::function<BigFloat(const BigFloat&)> value_at;

  if (id == "LIM-FACT") {
    const long n = bounded_int(binding, "n", 0, 64);
    target = bf(Rational(1) / rising_factorial(Rational(1), n), prec);
    value_at = [=](const BigFloat& q) {
      return (one - q).pow_int(n) / qpoch_bf(q, q, n, prec);
    };
  } else if (id == "LIM-EXP") {
    const Rational t = binding.get("t");
    require_small_t(t);
    target = BigFloat::exp(bf(t, prec));
    value_at = [=](const BigFloat& q) {
      const BigFloat x = bf(t, prec) * (one - q);
      BigFloat s(prec), term = one, qj = q;
      for (long jj = 0; jj <= kIterGuard; ++jj) {
        s += term;
        term *= x / (one - qj);
        qj *= q;
        if (abs(term) < tail) return s;
      }
      throw std::domain_error("limit series did not converge within the iteration guard");
    };
  } else if (id == "LIM-PHI22") {
    const Rational a = binding.get("a"), b = binding.get("b");
    const Rational c = binding.get("c"), d = binding.get("d");
    const Rational t = binding.get("t");
    require_small_t(t);
    if (c.sign() <= 0 || d.sign() <= 0)
      throw std::invalid_argument("parameters 'c' and 'd' must be positive");
    {
      const BigFloat A = bf(a, prec), B = bf(b, prec), C = bf(c, prec), D = bf(d, prec);
      const BigFloat T = bf(t, prec);
      BigFloat s(prec), term = one;
      for (long k = 0; k <= kIterGuard; ++k) {
        s += term;
        const BigFloat fk = BigFloat::from_long(k, prec);
        term *= (A + fk) * (B + fk) /
                ((C + fk) * (D + fk) * BigFloat::from_long(k + 1, prec)) * T;
        if (abs(term) < tail) break;
        if (k == kIterGuard)
          throw std::domain_error("limit target series did not converge");
      }
      target = s;
    }
    value_at = [=](const BigFloat& q) {
      const BigFloat qa = q.pow_rational(a), qb = q.pow_rational(b);
      const BigFloat qc = q.pow_rational(c), qd = q.pow_rational(d);
      const BigFloat x = bf(t, prec) * (q - one);
      BigFloat s(prec), term = one, pw = one;  // pw = q^{k-1} when updating term k
      for (long k = 1; k <= kIterGuard; ++k) {
        s += term;
        const BigFloat num = (one - qa * pw) * (one - qb * pw);
        const BigFloat den = (one - qc * pw) * (one - qd * pw);
        const BigFloat qk = pw * q;
        term *= num / den * (-(pw * x)) / (one - qk);
        pw = qk;
        if (abs(term) < tail) return s;
      }
      throw std::domain_error("limit series did not converge within the iteration guard");
    };
  } else if (id == "LIM-COR-J") {
    const long m = bounded_int(binding, "m", 0, 16);
    const long j = bounded_int(binding, "j", 0, 16);
    const Rational t = binding.get("t");
    require_small_t(t);
    const Rational u = -t / (Rational(1) - t);
    target = bf(bateman_f_sum(m, j, u) / (Rational(1) - t), prec);
    value_at = [=](const BigFloat& q) {
      const BigFloat T = bf(t, prec);
      BigFloat s(prec), w = one;
      for (long n = 0; n <= kIterGuard; ++n) {
        s += lattice_value_bf(m, j, n, q, prec) * w;
        w *= T;
        if (abs(w) < tail) return s;
      }
      throw std::domain_error("limit series did not converge within the iteration guard");
    };
  } else if (id == "LIM-L11") {
    const long m = bounded_int(binding, "m", 0, 16);
    const Rational t = binding.get("t");
    require_small_t(t);
    Rational zm(0);
    {
      const std::vector<Rational> coeffs = c_batemanz_poly_coeffs(m);
      Rational x(1);
      for (const Rational& ck : coeffs) {
        zm += ck * x;
        x *= -t;
      }
    }
    target = BigFloat::exp(bf(t, prec)) * bf(zm, prec);
    value_at = [=](const BigFloat& q) {
      const BigFloat x = bf(t, prec) * (one - q);
      BigFloat s(prec), w = one, qn = q;
      for (long n = 0; n <= kIterGuard; ++n) {
        s += lattice_value_bf(m, 0, n, q, prec) * w;
        w *= x / (one - qn);
        qn *= q;
        if (abs(w) < tail) return s;
      }
      throw std::domain_error("limit series did not converge within the iteration guard");
    };
  } else {
    throw std::invalid_argument("unknown limit check '" + id + "'");
  }

  LimitReport r;
  r.id = id;
  for (const auto& [name, value] : binding.entries()) r.binding.emplace_back(name, value.str());
  r.precision_bits = precision_bits;
  r.target = target.str(12);
  for (int k = 1; k <= steps; ++k) {
    BigFloat q = step_q(k, prec);
    BigFloat err = abs(value_at(q) - target);
    r.steps.push_back({q, err});
  }

  double rate_sum = 0.0;
  int rate_count = 0;
  for (std::size_t i = 0; i + 1 < r.steps.size(); ++i) {
    const BigFloat& e0 = r.steps[i].error;
    const BigFloat& e1 = r.steps[i + 1].error;
    if (e0.sign() > 0 && e1.sign() > 0) {
      rate_sum += (e0 / e1).log2().to_double();
      ++rate_count;
    }
  }
  r.rate = rate_count > 0 ? rate_sum / rate_count : 0.0;

  const BigFloat tol = bf(Rational(1, 1000), prec) * (one + abs(target));
  const std::size_t S = r.steps.size();
  const bool mono = r.steps[S - 3].error >= r.steps[S - 2].error &&
                    r.steps[S - 2].error >= r.steps[S - 1].error;
  r.passed = r.steps.back().error < tol && mono;
  return r;
}

std::vector<LimitReport> limit_check_all(long precision_bits, int steps) {
  std::vector<LimitReport> out;
  for (const std::string& id : limit_ids())
    out.push_back(limit_check(id, limit_default_binding(id), precision_bits, steps));
  return out;
}

}  // namespace qident
