#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qident/bigfloat.hpp"
#include "qident/families.hpp"

namespace qident {

struct LimitStep {
  BigFloat q;
  BigFloat error;
};

struct LimitReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> binding;
  long precision_bits = 0;
  std::string target;  // decimal rendering of the limit value
  std::vector<LimitStep> steps;
  double rate = 0.0;  // mean log2 error contraction per step
  bool passed = false;
};

/// IDs of the q->1 numeric limit checks, in canonical order:
/// LIM-FACT, LIM-EXP, LIM-PHI22, LIM-COR-J, LIM-L11.
const std::vector<std::string>& limit_ids();

/// Default parameter binding for a limit check.
ParamBinding limit_default_binding(const std::string& id);

/// Evaluates the check along q_k = 1 - 2^{-(k+3)}, k = 1..steps, at the
/// given binary precision (>= 64; steps >= 3).  Passes when the final
/// error is below 1e-3 * (1 + |target|) and the error is non-increasing
/// over the last three steps.
LimitReport limit_check(const std::string& id, const ParamBinding& binding, long precision_bits,
                        int steps);

std::vector<LimitReport> limit_check_all(long precision_bits, int steps);

}  // namespace qident
