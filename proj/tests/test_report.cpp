#include "doctest.h"

#include <sstream>

#include "bdcoh/report.hpp"

using namespace bdcoh;

namespace {
struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bdcoh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json cli_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto o = cli(args);
  REQUIRE(o.code == 0);
  return json::parse(o.out);
}
}  // namespace

TEST_CASE("scalar and tensor JSON") {
  const json q = to_json(QuadRational(Rational(1, 2), Rational(-3), 2));
  CHECK(q == json{{"a", "1/2"}, {"b", "-3"}, {"d", 2}});
  const json t = to_json(drinfeld_jimbo(2).tensor);
  REQUIRE(t.is_array());
  for (size_t i = 1; i < t.size(); ++i) CHECK(t[i - 1]["indices"] < t[i]["indices"]);
  CHECK(to_json(drinfeld_jimbo(2))["n"] == 2);
}

TEST_CASE("triples subcommand") {
  const json j = cli_json({"triples", "--n", "3"});
  CHECK(j["result"]["count"] == 3);
  int cg = 0;
  for (const auto& t : j["result"]["triples"])
    if (!t["gamma1"].empty()) {
      CHECK(t["twistable"] == true);
      CHECK(t["str"] == 1);
      ++cg;
    }
  CHECK(cg == 2);
  CHECK(cli_json({"triples", "--n", "4", "--twistable"})["result"]["count"] == 5);
}

TEST_CASE("cohomology subcommand") {
  const json j = cli_json({"cohomology", "--triple", "n=3;g1=1;g2=2;tau=1>2", "--field", "R", "--d", "-1"});
  const json& r = j["result"];
  CHECK(r["class_count"] == 2);
  CHECK(r["str"] == 1);
  CHECK(r["twistable"] == true);
  REQUIRE(r["classes"].size() == 2);
  for (const auto& c : r["classes"]) CHECK(c["verified"] == true);
  CHECK(r["classes"][1]["vector"] == json::array({-1}));
  CHECK(r["classes"][1]["representative_matrix"][0][0] == json{{"a", "-1"}, {"b", "0"}, {"d", -1}});
  for (const auto& v : j["verification"]) CHECK(v["passed"] == true);

  const auto text = cli({"cohomology", "--triple", "n=3;g1=1;g2=2;tau=1>2", "--field", "Laurent"});
  CHECK(text.code == 0);
  CHECK(text.out.find("1 class") != std::string::npos);
}

TEST_CASE("brauer subcommand") {
  const json j = cli_json({"brauer", "--d", "-1", "--b", "-1"});
  CHECK(j["result"]["split"] == false);
  CHECK(j["result"]["bad_places"] == json::array({2, "inf"}));
  const json k = cli_json({"brauer", "--d", "2", "--b", "3", "--compare", "3", "2"});
  CHECK(k["result"]["compare"]["same_class"] == true);
}

TEST_CASE("total subcommand") {
  const json j = cli_json({"total", "--triple", "n=3;g1=1;g2=2;tau=1>2", "--field", "Q", "--d-bound", "3"});
  CHECK(j["result"]["entries"].size() == 5);
}

TEST_CASE("rmatrix subcommand") {
  const auto o = cli({"rmatrix", "--triple", "n=4;g1=1,2;g2=2,3;tau=1>2,2>3", "--verify"});
  CHECK(o.code == 0);
  CHECK(o.out.find("[FAIL]") == std::string::npos);
}

TEST_CASE("determinism") {
  const std::vector<std::string> args{"cohomology", "--triple", "n=3;g1=1;g2=2;tau=1>2", "--field", "Q", "--d", "-1",
                                      "--classes", "4", "--seed", "9", "--format", "json"};
  CHECK(cli(args).out == cli(args).out);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"triples", "--n", "3", "--bogus"}).code == kExitUsage);
  CHECK(cli({"cohomology", "--triple", "n=3;g1=1;g2=2;tau=1>2", "--field", "Z", "--d", "2"}).code == kExitUsage);
  CHECK(cli({"cohomology", "--triple", "n=3;g1=1;g2=2;tau=1>2", "--field", "Q", "--d", "4"}).code == kExitUsage);
  const auto bad = cli({"rmatrix", "--triple", "n=3;g1=1;g2=2;tau=1>>2"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("column 21") != std::string::npos);

  Report rep;
  rep.claim("something", "a check", false);
  CHECK(rep.exit_code == kExitVerification);
  CHECK(rep.render(OutputFormat::Text).find("[FAIL] something") != std::string::npos);
}
