#include "qident/report.hpp"

#include <cstdio>
#include <ostream>

namespace qident {

namespace {

using nlohmann::ordered_json;

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

std::string format_rate(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", rate);
  return buf;
}

std::string binding_text(const std::vector<std::pair<std::string, std::string>>& binding) {
  std::string out;
  for (const auto& [name, value] : binding) {
    if (!out.empty()) out += ", ";
    out += name + "=" + value;
  }
  return out;
}

}  // namespace

std::string status_name(VerificationReport::Status status) {
  switch (status) {
    case VerificationReport::Status::Pass:
      return "pass";
    case VerificationReport::Status::Fail:
      return "fail";
    case VerificationReport::Status::Error:
      return "error";
  }
  return "error";
}

ordered_json report_to_json(const VerificationReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["status"] = status_name(r.status);
  j["order"] = r.order;
  j["mode"] = r.mode;
  ordered_json b = ordered_json::object();
  for (const auto& [name, value] : r.binding) b[name] = value;
  j["binding"] = b;
  if (r.first_mismatch) {
    ordered_json m;
    m["power"] = r.first_mismatch->power;
    m["lhs"] = r.first_mismatch->lhs.str();
    m["rhs"] = r.first_mismatch->rhs.str();
    j["first_mismatch"] = m;
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

ordered_json summary_to_json(const VerifySummary& s) {
  ordered_json j;
  j["total"] = s.total;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["errors"] = s.errors;
  ordered_json reports = ordered_json::array();
  for (const auto& r : s.reports) reports.push_back(report_to_json(r));
  j["reports"] = reports;
  return j;
}

ordered_json limit_to_json(const LimitReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["precision_bits"] = r.precision_bits;
  ordered_json steps = ordered_json::array();
  for (const auto& st : r.steps) {
    ordered_json s;
    s["q"] = st.q.str();
    s["error"] = st.error.str();
    steps.push_back(s);
  }
  j["steps"] = steps;
  j["rate"] = r.rate;
  j["status"] = r.passed ? "pass" : "fail";
  return j;
}

void print_report_line(std::ostream& os, const VerificationReport& r) {
  os << r.id << "  [" << r.mode << "]  order " << r.order << "  " << status_name(r.status);
  os << "  (" << binding_text(r.binding) << ")";
  os << "  " << format_ms(r.elapsed_ms) << " ms";
  if (r.first_mismatch)
    os << "\n    first mismatch at t^" << r.first_mismatch->power << ": lhs "
       << r.first_mismatch->lhs.str() << ", rhs " << r.first_mismatch->rhs.str();
  if (!r.message.empty()) os << "\n    error: " << r.message;
  os << "\n";
}

void print_summary_text(std::ostream& os, const VerifySummary& s) {
  for (const auto& r : s.reports) print_report_line(os, r);
  os << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed << ", errors "
     << s.errors << "\n";
}

void print_limit_text(std::ostream& os, const LimitReport& r) {
  os << r.id << "  (" << binding_text(r.binding) << ")  precision " << r.precision_bits
     << " bits  target " << r.target << "\n";
  for (const auto& st : r.steps)
    os << "    q=" << st.q.str() << "  error=" << st.error.str() << "\n";
  os << "    rate " << format_rate(r.rate) << "  " << (r.passed ? "pass" : "fail") << "\n";
}

}  // namespace qident
