#include "transvect/cli.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace transvect::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "transvect");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("lemma-a json") {
  auto r = invoke({"lemma-a", "--e-max", "3", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "lemma-a");
  CHECK(j["pass"] == true);
  REQUIRE(j["rows"].size() == 9);
  for (const auto& row : j["rows"]) {
    CHECK(row["agree"] == true);
    CHECK(row["n1_direct"] == row["n1_closed"]);
  }
  CHECK(j["rows"][0]["e"] == 1);
  CHECK(j["config"]["e_max"] == 3);
}

TEST_CASE("output is byte stable") {
  for (const char* fmt : {"json", "csv", "text"}) {
    auto a = invoke({"characters", "--r", "3", "--d", "8", "--format", fmt});
    auto b = invoke({"characters", "--r", "3", "--d", "8", "--format", fmt});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  auto a = invoke({"covariants", "--suite", "ternary", "--trials", "2", "--format", "json", "--jobs", "2"});
  auto b = invoke({"covariants", "--suite", "ternary", "--trials", "2", "--format", "json", "--jobs", "1"});
  CHECK(a.code == 0);
  CHECK(nlohmann::json::parse(a.out)["rows"] == nlohmann::json::parse(b.out)["rows"]);
}

TEST_CASE("characters text") {
  auto r = invoke({"characters", "--r", "3", "--d", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("S18 S14 S12 S10 S8 S6") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("csv header") {
  auto r = invoke({"lemma-a", "--e-max", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("e,p,n1_direct,n1_graphs,n1_dixon,n1_closed,generic_q,agree\n", 0) == 0);
}

TEST_CASE("other commands pass") {
  CHECK(invoke({"dims"}).code == 0);
  CHECK(invoke({"lemma-b", "--r-max", "3", "--e-max", "1"}).code == 0);
  CHECK(invoke({"z-series", "--order", "3"}).code == 0);
  CHECK(invoke({"covariants", "--trials", "2"}).code == 0);
}

TEST_CASE("raw normalization reports the mismatch") {
  auto r = invoke({"covariants", "--trials", "1", "--normalization", "raw", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["convention_mismatch"] == true);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"lemma-a", "--e-max", "9"}).code == 2);
  CHECK(invoke({"lemma-a", "--e-max", "0"}).code == 2);
  CHECK(invoke({"lemma-a", "--jobs", "0"}).code == 2);
  CHECK(invoke({"lemma-a", "--format", "xml"}).code == 2);
  CHECK(invoke({"covariants", "--suite", "quintic"}).code == 2);
  CHECK(invoke({"nope"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"characters", "--r", "3", "--d", "7"}).code == 2);
}

TEST_CASE("validate") {
  RunConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.e_max = 12;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.unbounded = true;
  CHECK_NOTHROW(validate(cfg));
  cfg.command = "covariants";
  auto j = cfg.to_json();
  CHECK(j["seed"] == 20240601);
  CHECK(j["trials"] == 10);
}
