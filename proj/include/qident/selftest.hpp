#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qident {

struct SelftestResult {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Runs the internal property suites plus a seeded full-registry
/// verification; prints one line per suite to `os`.
SelftestResult run_selftest(std::ostream& os);

}  // namespace qident
