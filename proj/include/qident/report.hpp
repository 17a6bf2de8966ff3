#pragma once

#include <iosfwd>

#include "json.hpp"
#include "qident/limits.hpp"
#include "qident/verify.hpp"

namespace qident {

/// Stable field order: id, status, order, mode, binding, first_mismatch,
/// elapsed_ms.  Output is byte-identical across runs except elapsed_ms.
nlohmann::ordered_json report_to_json(const VerificationReport& r);
nlohmann::ordered_json summary_to_json(const VerifySummary& s);
/// Field order: id, precision_bits, steps (q, error), rate, status.
nlohmann::ordered_json limit_to_json(const LimitReport& r);

std::string status_name(VerificationReport::Status status);

void print_report_line(std::ostream& os, const VerificationReport& r);
void print_summary_text(std::ostream& os, const VerifySummary& s);
void print_limit_text(std::ostream& os, const LimitReport& r);

}  // namespace qident
