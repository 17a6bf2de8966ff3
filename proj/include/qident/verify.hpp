#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qident/families.hpp"
#include "qident/series.hpp"

namespace qident {

/// How a parameter is drawn when sampling a binding.
enum class SampleKind {
  Base,        // p in (0,1)
  FreeParam,   // nonzero rational, != 1 (a, Z, L, b)
  MuParam,     // like FreeParam but also != q^{-i}
  RatNonzero,  // nonzero rational argument (z)
  RatAny,      // rational argument, may be zero
  LambdaRat,   // nonzero rational weight exponent (classical lambda)
  Int06,       // integer in 0..6 (m, j, s)
  Int03,       // integer in 0..3 (ell)
};

struct ParamSpec {
  std::string name;
  bool integer;
  SampleKind sample;
  std::string constraint;  // human-readable, for listings
};

enum class RunMode { Free, Consistent };
std::string mode_name(RunMode mode);

enum class ModeSelect { Free, Consistent, Both };

/// Registry entry: identity ID, its parameter schema, and the two series
/// builders whose outputs must agree coefficientwise.
struct IdentitySpec {
  std::string id;
  std::string description;
  std::vector<ParamSpec> schema;
  bool q_identity;  // q-identities run in free and consistent mode
  std::function<Series(const ParamBinding&, int)> lhs;
  std::function<Series(const ParamBinding&, int)> rhs;
  /// Consistent-mode coupling (derives a, Z, L, mu, b from integer
  /// exponents); absent when both modes sample identically.
  std::function<void(ParamBinding&, std::mt19937_64&)> consistent_sampler;
};

const std::vector<IdentitySpec>& registry();
const IdentitySpec* find_identity(const std::string& id);

Series build_lhs(const std::string& id, const ParamBinding& binding, int N);
/// Builds the RHS; the test-only perturbation hook below is applied here.
Series build_rhs(const std::string& id, const ParamBinding& binding, int N);

struct FirstMismatch {
  int power;
  Rational lhs, rhs;
};

struct VerificationReport {
  std::string id;
  std::string mode;
  int order = 0;
  enum class Status { Pass, Fail, Error } status = Status::Error;
  std::vector<std::pair<std::string, std::string>> binding;
  std::optional<FirstMismatch> first_mismatch;
  std::string message;  // set when status == Error
  double elapsed_ms = 0.0;
};

/// Validate a caller-supplied binding against the identity's schema
/// (all required names present, integer kinds integral, value constraints
/// satisfied); names outside the schema are ignored.
void check_binding(const IdentitySpec& spec, const ParamBinding& binding);

VerificationReport verify_identity(const std::string& id, const ParamBinding& binding, int N,
                                   RunMode mode = RunMode::Free);

/// Deterministic pseudo-random schema-satisfying binding.
ParamBinding sample_binding(const std::string& id, std::uint64_t seed, RunMode mode);

struct VerifySummary {
  int total = 0, passed = 0, failed = 0, errors = 0;
  std::vector<VerificationReport> reports;
};

/// Runs every registry identity (or just `only_id` when nonempty) at
/// `trials` sampled bindings per applicable mode.
VerifySummary verify_all(std::uint64_t seed, int trials, int N, ModeSelect mode,
                         const std::string& only_id = "");

/// Test hook: adds +1 to the RHS coefficient of t^power for the given
/// identity in every subsequent build_rhs call.
void inject_rhs_perturbation(const std::string& id, int power);
void clear_rhs_perturbation();

}  // namespace qident
