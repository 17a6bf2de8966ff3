#include "qident/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "qident/qcore.hpp"

namespace qident {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t mix_seed(const std::string& id, std::uint64_t seed, RunMode mode) {
  std::uint64_t h = fnv1a(id);
  h ^= (seed + 1) * 0x9E3779B97F4A7C15ull;
  h ^= fnv1a(mode_name(mode));
  return h;
}

long rand_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational draw_base(std::mt19937_64& rng) {
  static const std::pair<long, long> pool[] = {{1, 2}, {2, 3}, {3, 5}, {5, 8}, {7, 10}};
  if (rng() % 2 == 0) {
    const auto& [n, d] = pool[rng() % 5];
    return Rational(n, d);
  }
  long den = rand_range(rng, 2, 12);
  long num = rand_range(rng, 1, den - 1);
  return Rational(num, den);
}

// nonzero, != 1, occasionally negative
Rational draw_nonzero(std::mt19937_64& rng, long max_num, long max_den) {
  while (true) {
    Rational r(rand_range(rng, 1, max_num), rand_range(rng, 1, max_den));
    if (rng() % 4 == 0) r = -r;
    if (!r.is_one()) return r;
  }
}

bool is_inverse_q_power(const Rational& mu, const QBase& base, int bound = 64) {
  Rational t = mu;
  for (int i = 0; i <= bound; ++i) {
    if (t.is_one()) return true;
    t *= base.q;
  }
  return false;
}

std::optional<std::pair<std::string, int>> g_perturbation;

}  // namespace

std::string mode_name(RunMode mode) {
  return mode == RunMode::Free ? "free" : "consistent";
}

Series build_lhs(const std::string& id, const ParamBinding& binding, int N) {
  const IdentitySpec* spec = find_identity(id);
  if (!spec) throw std::invalid_argument("unknown identity '" + id + "'");
  return spec->lhs(binding, N);
}

Series build_rhs(const std::string& id, const ParamBinding& binding, int N) {
  const IdentitySpec* spec = find_identity(id);
  if (!spec) throw std::invalid_argument("unknown identity '" + id + "'");
  Series s = spec->rhs(binding, N);
  if (g_perturbation && g_perturbation->first == id && g_perturbation->second <= N)
    s.at(g_perturbation->second) += Rational(1);
  return s;
}

void inject_rhs_perturbation(const std::string& id, int power) {
  g_perturbation = std::make_pair(id, power);
}

void clear_rhs_perturbation() { g_perturbation.reset(); }

void check_binding(const IdentitySpec& spec, const ParamBinding& binding) {
  for (const ParamSpec& ps : spec.schema) {
    if (!binding.has(ps.name))
      throw std::invalid_argument("missing parameter '" + ps.name + "'");
    const Rational& v = binding.get(ps.name);
    if (ps.integer) {
      if (!v.is_integer() || v.sign() < 0)
        throw std::invalid_argument("parameter '" + ps.name + "' must be an integer >= 0, got " +
                                    v.str());
    }
    switch (ps.sample) {
      case SampleKind::Base:
        if (v.sign() <= 0 || v >= Rational(1))
          throw std::invalid_argument("parameter 'p' must lie in (0,1), got " + v.str());
        break;
      case SampleKind::FreeParam:
      case SampleKind::RatNonzero:
      case SampleKind::LambdaRat:
        if (v.is_zero())
          throw std::invalid_argument("parameter '" + ps.name + "' must be nonzero");
        break;
      case SampleKind::MuParam: {
        if (v.is_zero())
          throw std::invalid_argument("parameter '" + ps.name + "' must be nonzero");
        if (binding.has("p") && is_inverse_q_power(v, QBase(binding.get("p"))))
          throw std::invalid_argument("parameter '" + ps.name +
                                      "' must not be an inverse power q^{-i}");
        break;
      }
      default:
        break;
    }
  }
}

ParamBinding sample_binding(const std::string& id, std::uint64_t seed, RunMode mode) {
  const IdentitySpec* spec = find_identity(id);
  if (!spec) throw std::invalid_argument("unknown identity '" + id + "'");
  std::mt19937_64 rng(mix_seed(id, seed, mode));
  ParamBinding b;
  for (const ParamSpec& ps : spec->schema) {
    switch (ps.sample) {
      case SampleKind::Base:
        b.set(ps.name, draw_base(rng));
        break;
      case SampleKind::FreeParam:
        b.set(ps.name, draw_nonzero(rng, 16, 16));
        break;
      case SampleKind::MuParam: {
        QBase base(b.get("p"));
        Rational mu = draw_nonzero(rng, 16, 16);
        while (is_inverse_q_power(mu, base)) mu = draw_nonzero(rng, 16, 16);
        b.set(ps.name, mu);
        break;
      }
      case SampleKind::RatNonzero:
        b.set(ps.name, draw_nonzero(rng, 16, 16));
        break;
      case SampleKind::RatAny:
        b.set(ps.name, rng() % 8 == 0 ? Rational(0) : draw_nonzero(rng, 16, 16));
        break;
      case SampleKind::LambdaRat:
        b.set(ps.name, draw_nonzero(rng, 8, 8));
        break;
      case SampleKind::Int06:
        b.set(ps.name, Rational(rand_range(rng, 0, 6)));
        break;
      case SampleKind::Int03:
        b.set(ps.name, Rational(rand_range(rng, 0, 3)));
        break;
    }
  }
  if (mode == RunMode::Consistent && spec->consistent_sampler) spec->consistent_sampler(b, rng);
  return b;
}

VerificationReport verify_identity(const std::string& id, const ParamBinding& binding, int N,
                                   RunMode mode) {
  VerificationReport r;
  r.id = id;
  r.mode = mode_name(mode);
  r.order = N;
  for (const auto& [name, value] : binding.entries()) r.binding.emplace_back(name, value.str());

  auto t0 = std::chrono::steady_clock::now();
  try {
    const IdentitySpec* spec = find_identity(id);
    if (!spec) throw std::invalid_argument("unknown identity '" + id + "'");
    check_binding(*spec, binding);
    Series lhs = build_lhs(id, binding, N);
    Series rhs = build_rhs(id, binding, N);
    auto mm = equal_to_order(lhs, rhs, N);
    if (mm.equal) {
      r.status = VerificationReport::Status::Pass;
    } else {
      r.status = VerificationReport::Status::Fail;
      r.first_mismatch = FirstMismatch{mm.power, mm.lhs, mm.rhs};
    }
  } catch (const std::exception& e) {
    r.status = VerificationReport::Status::Error;
    r.message = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

VerifySummary verify_all(std::uint64_t seed, int trials, int N, ModeSelect mode,
                         const std::string& only_id) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!only_id.empty() && !find_identity(only_id))
    throw std::invalid_argument("unknown identity '" + only_id + "'");

  VerifySummary sum;
  for (const IdentitySpec& spec : registry()) {
    if (!only_id.empty() && spec.id != only_id) continue;
    std::vector<RunMode> modes;
    if (spec.q_identity) {
      if (mode == ModeSelect::Free || mode == ModeSelect::Both) modes.push_back(RunMode::Free);
      if (mode == ModeSelect::Consistent || mode == ModeSelect::Both)
        modes.push_back(RunMode::Consistent);
    } else {
      modes.push_back(RunMode::Free);  // classical identities have one mode
    }
    for (RunMode m : modes)
      for (int trial = 0; trial < trials; ++trial) {
        ParamBinding b = sample_binding(spec.id, seed + static_cast<std::uint64_t>(trial), m);
        sum.reports.push_back(verify_identity(spec.id, b, N, m));
      }
  }
  sum.total = static_cast<int>(sum.reports.size());
  for (const auto& r : sum.reports) {
    switch (r.status) {
      case VerificationReport::Status::Pass:
        ++sum.passed;
        break;
      case VerificationReport::Status::Fail:
        ++sum.failed;
        break;
      case VerificationReport::Status::Error:
        ++sum.errors;
        break;
    }
  }
  return sum;
}

}  // namespace qident
