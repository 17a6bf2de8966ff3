#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "qident/report.hpp"
#include "qident/verify.hpp"

using namespace qident;

static Rational R(long n, long d = 1) { return Rational(n, d); }

static ParamBinding bind_of(std::vector<std::pair<const char*, Rational>> kvs) {
  ParamBinding b;
  for (const auto& [k, v] : kvs) b.set(k, v);
  return b;
}

TEST_CASE("registry layout") {
  const auto& reg = registry();
  REQUIRE(reg.size() == 28);
  const char* ids[] = {
      "Q-GF-2.1",  "Q-GF-3.1",  "Q-GF-3.2",  "Q-GF-3.3",  "Q-GF-3.4",
      "Q-GF-3.6",  "Q-GF-3.7",  "Q-GF-3.8",  "Q-GF-3.9",  "Q-GF-3.10",
      "Q-GF-3.11", "Q-REM",     "Q-QCP",     "C-GF-Z",    "C-GF-B1",
      "C-GF-B2",   "C-GF-SYL1", "C-GF-SYL2", "C-GF-CES1", "C-GF-CES2",
      "C-L-1.1",   "C-COR-1",   "C-COR-2",   "C-COR-3",   "C-COR-4",
      "C-CONN-LAG", "C-CONN-CHA", "C-CONN-JAC"};
  for (std::size_t i = 0; i < reg.size(); ++i) CHECK(reg[i].id == ids[i]);

  int q_count = 0;
  for (const auto& spec : reg) {
    if (spec.q_identity) ++q_count;
    CHECK_FALSE(spec.description.empty());
  }
  CHECK(q_count == 13);

  CHECK(find_identity("Q-GF-3.4") != nullptr);
  CHECK(find_identity("Q-GF-3.5") == nullptr);
}

TEST_CASE("verify_identity on explicit bindings") {
  VerificationReport r =
      verify_identity("Q-GF-2.1", bind_of({{"p", R(3, 5)}, {"a", R(2, 7)}}), 8);
  CHECK(r.status == VerificationReport::Status::Pass);
  CHECK(r.id == "Q-GF-2.1");
  CHECK(r.mode == "free");
  CHECK(r.order == 8);
  CHECK_FALSE(r.first_mismatch.has_value());
  REQUIRE(r.binding.size() == 2);
  CHECK(r.binding[0] == std::pair<std::string, std::string>("p", "3/5"));
  CHECK(r.binding[1] == std::pair<std::string, std::string>("a", "2/7"));
  CHECK(r.elapsed_ms >= 0.0);

  CHECK(verify_identity("C-GF-SYL1", bind_of({{"z", R(-7, 3)}}), 10).status ==
        VerificationReport::Status::Pass);
  CHECK(verify_identity("Q-GF-3.8", bind_of({{"p", R(1, 2)}, {"s", R(2)}, {"z", R(3, 4)}}), 10)
            .status == VerificationReport::Status::Pass);
}

TEST_CASE("verify_identity reports binding errors") {
  VerificationReport bad =
      verify_identity("Q-GF-3.6", bind_of({{"p", R(1, 2)}, {"z", R(0)}, {"Z", R(1, 3)}}), 6);
  CHECK(bad.status == VerificationReport::Status::Error);
  CHECK_FALSE(bad.message.empty());

  CHECK(verify_identity("Q-GF-3.4",
                        bind_of({{"p", R(1, 2)}, {"b", R(1, 3)}, {"mu", R(16)}}), 6)
            .status == VerificationReport::Status::Error);  // mu = q^{-2}
  CHECK(verify_identity("NOPE", ParamBinding{}, 6).status ==
        VerificationReport::Status::Error);
}

TEST_CASE("check_binding") {
  const IdentitySpec* spec = find_identity("Q-GF-3.4");
  REQUIRE(spec != nullptr);
  ParamBinding good = bind_of({{"p", R(1, 2)}, {"b", R(1, 3)}, {"mu", R(3, 5)}});
  CHECK_NOTHROW(check_binding(*spec, good));
  good.set("extra", R(9));  // names outside the schema are ignored
  CHECK_NOTHROW(check_binding(*spec, good));

  CHECK_THROWS_AS(check_binding(*spec, bind_of({{"p", R(1, 2)}, {"b", R(1, 3)}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      check_binding(*spec, bind_of({{"p", R(3, 2)}, {"b", R(1, 3)}, {"mu", R(3, 5)}})),
      std::invalid_argument);
  CHECK_THROWS_AS(
      check_binding(*spec, bind_of({{"p", R(1, 2)}, {"b", R(0)}, {"mu", R(3, 5)}})),
      std::invalid_argument);

  const IdentitySpec* lat = find_identity("Q-GF-3.9");
  REQUIRE(lat != nullptr);
  CHECK_THROWS_AS(
      check_binding(*lat, bind_of({{"p", R(1, 2)}, {"m", R(1, 2)}, {"j", R(1)}})),
      std::invalid_argument);
  CHECK_THROWS_AS(
      check_binding(*lat, bind_of({{"p", R(1, 2)}, {"m", R(-2)}, {"j", R(1)}})),
      std::invalid_argument);
}

TEST_CASE("sampling is deterministic and schema-conforming") {
  for (const char* id : {"Q-GF-3.4", "Q-GF-3.7", "C-GF-CES2"}) {
    const IdentitySpec* spec = find_identity(id);
    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
      ParamBinding a = sample_binding(id, seed, RunMode::Free);
      ParamBinding b = sample_binding(id, seed, RunMode::Free);
      REQUIRE(a.entries().size() == b.entries().size());
      for (std::size_t i = 0; i < a.entries().size(); ++i) {
        CHECK(a.entries()[i].first == b.entries()[i].first);
        CHECK(a.entries()[i].second == b.entries()[i].second);
      }
      CHECK_NOTHROW(check_binding(*spec, a));
      CHECK_NOTHROW(check_binding(*spec, sample_binding(id, seed, RunMode::Consistent)));
    }
  }
}

TEST_CASE("consistent mode couples the free parameters") {
  // Q-GF-2.1: a = p^{z+1} with odd z, so a is an integer power of p
  ParamBinding b = sample_binding("Q-GF-2.1", 5, RunMode::Consistent);
  Rational p = b.get("p");
  Rational a = b.get("a");
  bool is_power = false;
  Rational pw(1);
  for (int k = 0; k <= 8 && !is_power; ++k) {
    if (a == pw || a == pw.pow(-1)) is_power = true;
    pw *= p;
  }
  CHECK(is_power);

  // Q-GF-3.7: L = q^lambda with lambda in 1..6
  ParamBinding c = sample_binding("Q-GF-3.7", 11, RunMode::Consistent);
  Rational q = c.get("p") * c.get("p");
  Rational L = c.get("L");
  bool is_qpow = false;
  Rational qp = q;
  for (int k = 1; k <= 6 && !is_qpow; ++k) {
    if (L == qp) is_qpow = true;
    qp *= q;
  }
  CHECK(is_qpow);
}

TEST_CASE("verify_all shapes and modes") {
  VerifySummary one = verify_all(42, 2, 6, ModeSelect::Both, "Q-GF-3.8");
  CHECK(one.total == 4);  // 2 modes x 2 trials
  CHECK(one.passed == 4);
  CHECK(one.reports[0].mode == "free");
  CHECK(one.reports[2].mode == "consistent");

  VerifySummary cls = verify_all(42, 3, 6, ModeSelect::Both, "C-GF-Z");
  CHECK(cls.total == 3);  // classical identities only run free
  CHECK(cls.passed == 3);

  VerifySummary free_only = verify_all(7, 1, 6, ModeSelect::Free, "Q-GF-3.8");
  CHECK(free_only.total == 1);
  CHECK(free_only.reports[0].mode == "free");

  CHECK_THROWS_AS(verify_all(1, 0, 6, ModeSelect::Free), std::invalid_argument);
  CHECK_THROWS_AS(verify_all(1, 1, 6, ModeSelect::Free, "NOPE"), std::invalid_argument);
}

TEST_CASE("perturbation hook") {
  inject_rhs_perturbation("Q-GF-3.8", 3);
  VerificationReport bad =
      verify_identity("Q-GF-3.8", bind_of({{"p", R(1, 2)}, {"s", R(1)}, {"z", R(2, 3)}}), 8);
  CHECK(bad.status == VerificationReport::Status::Fail);
  REQUIRE(bad.first_mismatch.has_value());
  CHECK(bad.first_mismatch->power == 3);
  CHECK(bad.first_mismatch->rhs - bad.first_mismatch->lhs == R(1));

  // other identities are unaffected
  CHECK(verify_identity("Q-GF-3.9", bind_of({{"p", R(1, 2)}, {"m", R(2)}, {"j", R(1)}}), 8)
            .status == VerificationReport::Status::Pass);

  clear_rhs_perturbation();
  CHECK(verify_identity("Q-GF-3.8", bind_of({{"p", R(1, 2)}, {"s", R(1)}, {"z", R(2, 3)}}), 8)
            .status == VerificationReport::Status::Pass);
}

TEST_CASE("report json shape") {
  VerificationReport r =
      verify_identity("Q-GF-3.8", bind_of({{"p", R(1, 2)}, {"s", R(1)}, {"z", R(2, 3)}}), 6);
  nlohmann::ordered_json j = report_to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"id", "status", "order", "mode", "binding",
                                         "first_mismatch", "elapsed_ms"});
  CHECK(j["id"] == "Q-GF-3.8");
  CHECK(j["status"] == "pass");
  CHECK(j["first_mismatch"].is_null());
  CHECK(j["binding"]["p"] == "1/2");

  inject_rhs_perturbation("Q-GF-3.8", 2);
  VerificationReport f =
      verify_identity("Q-GF-3.8", bind_of({{"p", R(1, 2)}, {"s", R(1)}, {"z", R(2, 3)}}), 6);
  clear_rhs_perturbation();
  nlohmann::ordered_json jf = report_to_json(f);
  CHECK(jf["status"] == "fail");
  CHECK(jf["first_mismatch"]["power"] == 2);
  CHECK(jf["first_mismatch"].contains("lhs"));
  CHECK(jf["first_mismatch"].contains("rhs"));

  VerifySummary sum = verify_all(3, 1, 6, ModeSelect::Free, "Q-GF-3.8");
  nlohmann::ordered_json js = summary_to_json(sum);
  CHECK(js["total"] == 1);
  CHECK(js["passed"] == 1);
  CHECK(js["failed"] == 0);
  CHECK(js["errors"] == 0);
  CHECK(js["reports"].is_array());
}

TEST_CASE("summary json is deterministic modulo elapsed_ms") {
  auto strip = [](nlohmann::ordered_json j) {
    for (auto& r : j["reports"]) r.erase("elapsed_ms");
    return j.dump();
  };
  VerifySummary s1 = verify_all(42, 2, 8, ModeSelect::Both, "Q-GF-3.4");
  VerifySummary s2 = verify_all(42, 2, 8, ModeSelect::Both, "Q-GF-3.4");
  CHECK(strip(summary_to_json(s1)) == strip(summary_to_json(s2)));
}
