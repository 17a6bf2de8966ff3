#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "qident/limits.hpp"
#include "qident/report.hpp"

using namespace qident;

static Rational R(long n, long d = 1) { return Rational(n, d); }

static ParamBinding bind_of(std::vector<std::pair<const char*, Rational>> kvs) {
  ParamBinding b;
  for (const auto& [k, v] : kvs) b.set(k, v);
  return b;
}

TEST_CASE("limit ids and defaults") {
  CHECK(limit_ids() == std::vector<std::string>{"LIM-FACT", "LIM-EXP", "LIM-PHI22",
                                                "LIM-COR-J", "LIM-L11"});
  CHECK(limit_default_binding("LIM-FACT").get_int("n") == 2);
  CHECK(limit_default_binding("LIM-EXP").get("t") == R(1, 2));
  CHECK(limit_default_binding("LIM-PHI22").get("d") == R(3, 2));
  CHECK_THROWS_AS(limit_default_binding("LIM-NOPE"), std::invalid_argument);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(limit_check("LIM-FACT", limit_default_binding("LIM-FACT"), 32, 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(limit_check("LIM-FACT", limit_default_binding("LIM-FACT"), 128, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(limit_check("LIM-NOPE", ParamBinding{}, 128, 6), std::invalid_argument);
  CHECK_THROWS_AS(limit_check("LIM-EXP", bind_of({{"t", R(3, 4)}}), 128, 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(limit_check("LIM-L11", bind_of({{"m", R(40)}, {"t", R(1, 3)}}), 128, 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      limit_check("LIM-PHI22",
                  bind_of({{"a", R(1)}, {"b", R(1)}, {"c", R(-1)}, {"d", R(1)}, {"t", R(1, 3)}}),
                  128, 6),
      std::invalid_argument);
}

TEST_CASE("q-factorial limit") {
  // n = 0 and n = 1: [n]_q! == n! for every q, so the error is exactly zero
  for (long n : {0L, 1L}) {
    LimitReport r = limit_check("LIM-FACT", bind_of({{"n", R(n)}}), 128, 5);
    CHECK(r.passed);
    CHECK(r.rate == 0.0);
    for (const auto& st : r.steps) CHECK(st.error.is_zero());
  }

  LimitReport r = limit_check("LIM-FACT", bind_of({{"n", R(3)}}), 128, 8);
  CHECK(r.passed);
  CHECK(r.precision_bits == 128);
  CHECK(r.steps.size() == 8);
  CHECK(r.target == "1.666666666667e-01");  // 1/3!
  CHECK(r.rate > 0.5);
  CHECK(r.rate < 1.5);
  for (std::size_t i = 1; i < r.steps.size(); ++i)
    CHECK(r.steps[i].error < r.steps[i - 1].error);
}

TEST_CASE("q-exponential limit") {
  LimitReport r = limit_check("LIM-EXP", limit_default_binding("LIM-EXP"), 96, 6);
  CHECK(r.passed);
  CHECK(r.rate > 0.5);
  CHECK(r.rate < 1.5);
  // target is e^{1/2}
  CHECK(r.target.substr(0, 6) == "1.6487");
}

TEST_CASE("phi to F limit") {
  LimitReport r = limit_check("LIM-PHI22", limit_default_binding("LIM-PHI22"), 128, 6);
  CHECK(r.passed);
  for (std::size_t i = 1; i < r.steps.size(); ++i)
    CHECK(r.steps[i].error <= r.steps[i - 1].error);
}

TEST_CASE("lattice generating function limit") {
  LimitReport r = limit_check("LIM-COR-J", limit_default_binding("LIM-COR-J"), 128, 6);
  CHECK(r.passed);
  LimitReport l = limit_check("LIM-L11", limit_default_binding("LIM-L11"), 128, 6);
  CHECK(l.passed);
}

TEST_CASE("limit json shape") {
  LimitReport r = limit_check("LIM-FACT", bind_of({{"n", R(2)}}), 128, 8);
  nlohmann::ordered_json j = limit_to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"id", "precision_bits", "steps", "rate", "status"});
  CHECK(j["id"] == "LIM-FACT");
  CHECK(j["precision_bits"] == 128);
  REQUIRE(j["steps"].size() == 8);
  CHECK(j["steps"][0].contains("q"));
  CHECK(j["steps"][0].contains("error"));
  CHECK(j["status"] == "pass");
}
