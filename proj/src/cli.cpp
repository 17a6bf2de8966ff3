#include "qident/cli.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qident/families.hpp"
#include "qident/limits.hpp"
#include "qident/report.hpp"
#include "qident/selftest.hpp"
#include "qident/verify.hpp"

namespace qident {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ParamBinding parse_params(const std::vector<std::string>& items) {
  ParamBinding b;
  for (const std::string& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("--param expects name=value, got '" + it + "'");
    const std::string name = it.substr(0, eq);
    const std::string value = it.substr(eq + 1);
    try {
      b.set(name, Rational::parse(value));
    } catch (const std::exception& e) {
      throw UsageError("invalid value for parameter '" + name + "': " + e.what());
    }
  }
  return b;
}

ModeSelect parse_mode(const std::string& mode) {
  if (mode == "free") return ModeSelect::Free;
  if (mode == "consistent") return ModeSelect::Consistent;
  return ModeSelect::Both;
}

int do_list(const std::string& format, std::ostream& out) {
  if (format == "json") {
    ordered_json ids = ordered_json::array();
    for (const IdentitySpec& spec : registry()) {
      ordered_json j;
      j["id"] = spec.id;
      j["description"] = spec.description;
      ordered_json params = ordered_json::array();
      for (const ParamSpec& ps : spec.schema) {
        ordered_json p;
        p["name"] = ps.name;
        p["integer"] = ps.integer;
        p["constraint"] = ps.constraint;
        params.push_back(p);
      }
      j["params"] = params;
      j["modes"] = spec.q_identity ? ordered_json::array({"free", "consistent"})
                                   : ordered_json::array({"free"});
      ids.push_back(j);
    }
    ordered_json lims = ordered_json::array();
    for (const std::string& id : limit_ids()) {
      ordered_json j;
      j["id"] = id;
      ordered_json defs = ordered_json::object();
      const ParamBinding defaults = limit_default_binding(id);
      for (const auto& [name, value] : defaults.entries()) defs[name] = value.str();
      j["defaults"] = defs;
      lims.push_back(j);
    }
    ordered_json root;
    root["identities"] = ids;
    root["limits"] = lims;
    out << root.dump(2) << "\n";
    return 0;
  }
  for (const IdentitySpec& spec : registry()) {
    out << spec.id << "  " << spec.description << "\n    params:";
    for (const ParamSpec& ps : spec.schema) out << " " << ps.name << " (" << ps.constraint << ")";
    out << "\n    modes: " << (spec.q_identity ? "free, consistent" : "free") << "\n";
  }
  out << "limit checks:\n";
  for (const std::string& id : limit_ids()) {
    out << "  " << id << "  defaults:";
    const ParamBinding defaults = limit_default_binding(id);
    for (const auto& [name, value] : defaults.entries())
      out << " " << name << "=" << value.str();
    out << "\n";
  }
  return 0;
}

int do_eval(const std::string& family, long n, const std::vector<std::string>& params,
            const std::string& format, std::ostream& out) {
  const auto fam = family_from_cli(family);
  if (!fam) throw UsageError("unknown family '" + family + "'");
  const ParamBinding b = parse_params(params);
  Rational value;
  try {
    value = family_is_classical(*fam) ? classical_family_value(*fam, n, b)
                                      : q_family_value(*fam, n, b);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    ordered_json j;
    j["family"] = family;
    j["n"] = n;
    ordered_json ps = ordered_json::object();
    for (const auto& [name, v] : b.entries()) ps[name] = v.str();
    j["params"] = ps;
    j["value"] = value.str();
    out << j.dump(2) << "\n";
  } else {
    out << value.str() << "\n";
  }
  return 0;
}

int do_verify(const std::string& id, bool all, const std::vector<std::string>& params,
              const std::string& mode, long order, std::uint64_t seed, long trials,
              const std::string& format, std::ostream& out) {
  if (all && !id.empty()) throw UsageError("--all and --id are mutually exclusive");
  if (!all && id.empty()) throw UsageError("choose an identity with --id or pass --all");
  if (all && !params.empty()) throw UsageError("explicit --param values require --id");

  VerifySummary sum;
  if (!params.empty()) {
    const IdentitySpec* spec = find_identity(id);
    if (!spec) throw UsageError("unknown identity '" + id + "'");
    const ParamBinding b = parse_params(params);
    for (const auto& [name, value] : b.entries()) {
      bool known = false;
      for (const ParamSpec& ps : spec->schema) known = known || ps.name == name;
      if (!known) throw UsageError("unknown parameter '" + name + "' for " + id);
    }
    sum.reports.push_back(verify_identity(id, b, static_cast<int>(order), RunMode::Free));
    sum.total = 1;
    sum.passed = sum.reports[0].status == VerificationReport::Status::Pass ? 1 : 0;
    sum.failed = sum.reports[0].status == VerificationReport::Status::Fail ? 1 : 0;
    sum.errors = sum.reports[0].status == VerificationReport::Status::Error ? 1 : 0;
  } else {
    sum = verify_all(seed, static_cast<int>(trials), static_cast<int>(order), parse_mode(mode),
                     id);
  }

  if (format == "json")
    out << summary_to_json(sum).dump(2) << "\n";
  else
    print_summary_text(out, sum);
  return sum.failed == 0 && sum.errors == 0 ? 0 : 1;
}

int do_limit(const std::string& id, const std::vector<std::string>& params, long precision,
             long steps, const std::string& format, std::ostream& out) {
  std::vector<LimitReport> reports;
  if (id.empty()) {
    if (!params.empty()) throw UsageError("explicit --param values require --id");
    reports = limit_check_all(precision, static_cast<int>(steps));
  } else {
    ParamBinding binding = limit_default_binding(id);  // rejects unknown IDs
    const ParamBinding user = parse_params(params);
    for (const auto& [name, value] : user.entries()) {
      if (!binding.has(name)) throw UsageError("unknown parameter '" + name + "' for " + id);
      binding.set(name, value);
    }
    reports.push_back(limit_check(id, binding, precision, static_cast<int>(steps)));
  }

  bool all_passed = true;
  for (const LimitReport& r : reports) all_passed = all_passed && r.passed;
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const LimitReport& r : reports) arr.push_back(limit_to_json(r));
    out << arr.dump(2) << "\n";
  } else {
    for (const LimitReport& r : reports) print_limit_text(out, r);
    out << (all_passed ? "all limit checks passed" : "some limit checks FAILED") << "\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification engine for q-polynomial identities", "qident"};
  app.require_subcommand(1);
  const auto fmt_check = CLI::IsMember({"text", "json"});

  std::string list_format = "text";
  auto* list_cmd = app.add_subcommand("list", "list identities and limit checks");
  list_cmd->add_option("--format", list_format, "text or json")->check(fmt_check);

  std::string eval_family;
  long eval_n = 0;
  std::vector<std::string> eval_params;
  std::string eval_format = "text";
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one polynomial family member");
  eval_cmd->add_option("--family", eval_family, "family name (see list)")->required();
  eval_cmd->add_option("--n", eval_n, "degree")->required()->check(CLI::Range(0l, 256l));
  eval_cmd->add_option("--param", eval_params, "name=value with exact rational value");
  eval_cmd->add_option("--format", eval_format, "text or json")->check(fmt_check);

  std::string v_id;
  bool v_all = false;
  std::vector<std::string> v_params;
  std::string v_mode = "both";
  long v_order = 16;
  std::uint64_t v_seed = 42;
  long v_trials = 5;
  std::string v_format = "text";
  auto* v_cmd = app.add_subcommand("verify", "compare identity sides coefficientwise");
  v_cmd->add_option("--id", v_id, "identity ID");
  v_cmd->add_flag("--all", v_all, "verify the whole registry");
  v_cmd->add_option("--param", v_params, "explicit binding (name=value)");
  v_cmd->add_option("--mode", v_mode, "free, consistent, or both")
      ->check(CLI::IsMember({"free", "consistent", "both"}));
  v_cmd->add_option("--order", v_order, "series truncation order")->check(CLI::Range(1l, 128l));
  v_cmd->add_option("--seed", v_seed, "sampling seed");
  v_cmd->add_option("--trials", v_trials, "sampled bindings per identity and mode")
      ->check(CLI::Range(1l, 1000l));
  v_cmd->add_option("--format", v_format, "text or json")->check(fmt_check);

  std::string l_id;
  std::vector<std::string> l_params;
  long l_precision = 256;
  long l_steps = 12;
  std::string l_format = "text";
  auto* l_cmd = app.add_subcommand("limit", "numeric q->1 limit checks");
  l_cmd->add_option("--id", l_id, "limit check ID (default: all)");
  l_cmd->add_option("--param", l_params, "override default parameters (name=value)");
  l_cmd->add_option("--precision", l_precision, "binary precision in bits")
      ->check(CLI::Range(64l, 8192l));
  l_cmd->add_option("--steps", l_steps, "number of q steps")->check(CLI::Range(3l, 64l));
  l_cmd->add_option("--format", l_format, "text or json")->check(fmt_check);

  auto* st_cmd = app.add_subcommand("selftest", "run internal property suites");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("qident");
  for (const std::string& a : args) storage.push_back(a);
  std::vector<const char*> argv;
  argv.reserve(storage.size());
  for (const std::string& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list_cmd->parsed()) return do_list(list_format, out);
    if (eval_cmd->parsed()) return do_eval(eval_family, eval_n, eval_params, eval_format, out);
    if (v_cmd->parsed())
      return do_verify(v_id, v_all, v_params, v_mode, v_order, v_seed, v_trials, v_format, out);
    if (l_cmd->parsed()) return do_limit(l_id, l_params, l_precision, l_steps, l_format, out);
    if (st_cmd->parsed()) {
      SelftestResult r = run_selftest(out);
      out << (r.ok() ? "selftest passed" : "selftest FAILED") << " (" << r.checks << " checks)\n";
      return r.ok() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qident
