#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qident/cli.hpp"

using nlohmann::ordered_json;

static int run_cli(const std::vector<std::string>& args, std::string* out_s = nullptr,
                   std::string* err_s = nullptr) {
  std::ostringstream out, err;
  int rc = qident::cli_main(args, out, err);
  if (out_s) *out_s = out.str();
  if (err_s) *err_s = err.str();
  return rc;
}

static bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

TEST_CASE("help and usage errors") {
  std::string out;
  CHECK(run_cli({"--help"}, &out) == 0);
  CHECK(contains(out, "qident"));
  CHECK(contains(out, "verify"));
  CHECK(run_cli({}) == 2);
  CHECK(run_cli({"frobnicate"}) == 2);
}

TEST_CASE("list") {
  std::string out;
  CHECK(run_cli({"list"}, &out) == 0);
  CHECK(contains(out, "Q-GF-2.1"));
  CHECK(contains(out, "C-CONN-JAC"));
  CHECK(contains(out, "LIM-L11"));
  CHECK(contains(out, "free, consistent"));

  std::string js;
  CHECK(run_cli({"list", "--format", "json"}, &js) == 0);
  ordered_json j = ordered_json::parse(js);
  CHECK(j["identities"].size() == 28);
  CHECK(j["limits"].size() == 5);
  CHECK(j["identities"][0]["id"] == "Q-GF-2.1");
  CHECK(run_cli({"list", "--format", "yaml"}) == 2);
}

TEST_CASE("eval") {
  std::string out;
  CHECK(run_cli({"eval", "--family", "q-cesaro", "--n", "1", "--param", "p=1/2",
                 "--param", "s=1", "--param", "z=1"},
                &out) == 0);
  CHECK(out == "3/2\n");

  CHECK(run_cli({"eval", "--family", "classical-sylvester", "--n", "2", "--param", "z=2"},
                &out) == 0);
  CHECK(out == "9\n");

  std::string js;
  CHECK(run_cli({"eval", "--family", "q-bateman", "--n", "1", "--param", "p=1/2",
                 "--param", "a=1/3", "--format", "json"},
                &js) == 0);
  ordered_json j = ordered_json::parse(js);
  CHECK(j["value"] == "-1/9");
  CHECK(j["params"]["a"] == "1/3");

  std::string err;
  CHECK(run_cli({"eval", "--family", "hermite", "--n", "1"}, nullptr, &err) == 2);
  CHECK(contains(err, "unknown family"));
  CHECK(run_cli({"eval", "--family", "q-bateman"}) == 2);  // --n missing
  CHECK(run_cli({"eval", "--family", "q-bateman", "--n", "-1", "--param", "p=1/2",
                 "--param", "a=1/3"}) == 2);
  CHECK(run_cli({"eval", "--family", "q-bateman", "--n", "1", "--param", "p=1/2",
                 "--param", "a=0.5"}, nullptr, &err) == 2);
  CHECK(contains(err, "invalid value"));
  CHECK(run_cli({"eval", "--family", "q-bateman", "--n", "1", "--param", "p=1/2"},
                nullptr, &err) == 2);
  CHECK(contains(err, "missing parameter"));
}

TEST_CASE("verify with explicit binding") {
  std::string out;
  CHECK(run_cli({"verify", "--id", "Q-GF-3.8", "--param", "p=1/2", "--param", "s=1",
                 "--param", "z=2/3", "--order", "8"},
                &out) == 0);
  CHECK(contains(out, "pass"));
  CHECK(contains(out, "total 1, passed 1, failed 0, errors 0"));

  // constraint violations surface as an error report and exit code 1
  CHECK(run_cli({"verify", "--id", "Q-GF-3.6", "--param", "p=1/2", "--param", "z=0",
                 "--param", "Z=1/3", "--order", "6"},
                &out) == 1);
  CHECK(contains(out, "error"));

  std::string err;
  CHECK(run_cli({"verify", "--id", "Q-GF-3.8", "--param", "w=1"}, nullptr, &err) == 2);
  CHECK(contains(err, "unknown parameter"));
}

TEST_CASE("verify sampled") {
  std::string out;
  CHECK(run_cli({"verify", "--id", "Q-GF-3.4", "--order", "8", "--trials", "2"}, &out) == 0);
  CHECK(contains(out, "[free]"));
  CHECK(contains(out, "[consistent]"));
  CHECK(contains(out, "total 4, passed 4"));

  CHECK(run_cli({"verify", "--id", "Q-GF-3.4", "--order", "8", "--trials", "2",
                 "--mode", "free"},
                &out) == 0);
  CHECK(contains(out, "total 2, passed 2"));

  CHECK(run_cli({"verify"}) == 2);
  CHECK(run_cli({"verify", "--all", "--id", "Q-GF-3.4"}) == 2);
  CHECK(run_cli({"verify", "--all", "--param", "p=1/2"}) == 2);
  CHECK(run_cli({"verify", "--id", "NOPE", "--order", "6"}) == 2);
  CHECK(run_cli({"verify", "--id", "Q-GF-3.4", "--order", "0"}) == 2);
  CHECK(run_cli({"verify", "--id", "Q-GF-3.4", "--mode", "sideways"}) == 2);
}

TEST_CASE("verify json output is deterministic modulo elapsed_ms") {
  auto canon = [](const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    for (auto& r : j["reports"]) r.erase("elapsed_ms");
    return j.dump();
  };
  std::string a, b;
  std::vector<std::string> args = {"verify", "--id",    "Q-GF-2.1", "--order", "6",
                                   "--trials", "2",     "--seed",   "7",       "--format",
                                   "json"};
  CHECK(run_cli(args, &a) == 0);
  CHECK(run_cli(args, &b) == 0);
  CHECK(canon(a) == canon(b));
  ordered_json j = ordered_json::parse(a);
  CHECK(j["total"] == 4);
  CHECK(j["reports"][0]["id"] == "Q-GF-2.1");
}

TEST_CASE("limit") {
  std::string out;
  CHECK(run_cli({"limit", "--id", "LIM-FACT", "--precision", "96", "--steps", "8"}, &out) == 0);
  CHECK(contains(out, "pass"));
  CHECK(contains(out, "all limit checks passed"));

  CHECK(run_cli({"limit", "--id", "LIM-FACT", "--param", "n=5", "--precision", "96",
                 "--steps", "8"},
                &out) == 0);

  std::string js;
  CHECK(run_cli({"limit", "--id", "LIM-EXP", "--precision", "96", "--steps", "4",
                 "--format", "json"},
                &js) == 0);
  ordered_json j = ordered_json::parse(js);
  REQUIRE(j.is_array());
  CHECK(j.size() == 1);
  CHECK(j[0]["id"] == "LIM-EXP");
  CHECK(j[0]["status"] == "pass");

  std::string err;
  CHECK(run_cli({"limit", "--id", "LIM-NOPE"}, nullptr, &err) == 2);
  CHECK(run_cli({"limit", "--id", "LIM-FACT", "--precision", "32"}) == 2);
  CHECK(run_cli({"limit", "--id", "LIM-FACT", "--steps", "2"}) == 2);
  CHECK(run_cli({"limit", "--id", "LIM-FACT", "--param", "x=1"}, nullptr, &err) == 2);
  CHECK(contains(err, "unknown parameter"));
  CHECK(run_cli({"limit", "--param", "n=3"}) == 2);  // overrides require --id
}
