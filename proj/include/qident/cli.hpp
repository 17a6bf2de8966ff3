#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qident {

/// Runs the command-line interface on `args` (program name excluded).
/// Returns 0 on success, 1 when a verification or limit check fails,
/// 2 on usage errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qident
