#include <doctest.h>

#include <json.hpp>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support.hpp"

using monent::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "monent");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("report") {
  const Result r = call({"report", testing::data_path("three_loops.txt")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["kind"] == "entropy_report");
  CHECK(j["graph"]["vertices"] == 3);
  CHECK(j["graph"]["edges"] == 7);
  CHECK(j["chain"]["consistent"] == true);
  CHECK(j["h_categorical"]["estimate"].get<double>() == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_FALSE(j["h_graph"].contains("trace"));

  const Result traced = call({"report", testing::data_path("three_loops.txt"), "--trace"});
  CHECK(nlohmann::json::parse(traced.out)["h_graph"].contains("trace"));

  const Result text = call({"report", testing::data_path("golden_mean.txt"), "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("0.694") != std::string::npos);

  // Identical input gives byte-identical output.
  CHECK(call({"report", testing::data_path("six_cycle.txt")}).out ==
        call({"report", testing::data_path("six_cycle.txt")}).out);
}

TEST_CASE("an unmet chain tolerance exits 2") {
  const Result r = call({"report", testing::data_path("golden_mean.txt"), "--chain-tol", "1e-15"});
  CHECK(r.code == 2);
  CHECK(nlohmann::json::parse(r.out)["chain"]["consistent"] == false);
}

TEST_CASE("input errors") {
  const Result bad = call({"report", testing::data_path("malformed.txt")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(call({"report", testing::data_path("missing.txt")}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"graph", testing::data_path("three_loops.txt"), "--format", "yaml"}).code == 1);
}

TEST_CASE("graph") {
  const Result dot = call({"graph", testing::data_path("six_cycle.txt"), "--dot"});
  REQUIRE(dot.code == 0);
  CHECK(count_of(dot.out, " -> ") == 8);
  const Result j = call({"graph", testing::data_path("three_loops.txt")});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["vertices"].size() == 3);
  CHECK(doc["edges"].size() == 7);
  CHECK(doc["schema_version"] == 1);
}

TEST_CASE("gb") {
  const std::string golden = testing::data_path("golden_mean.txt");
  const Result one = call({"gb", testing::data_path("three_loops.txt"), "--gens", "x"});
  REQUIRE(one.code == 0);
  const auto j = nlohmann::json::parse(one.out);
  REQUIRE(j["elements"].size() == 1);
  CHECK(j["elements"][0]["leading_monomial"] == "x");
  CHECK(j["certificate"]["holds"] == true);

  const Result two = call({"gb", testing::data_path("three_loops.txt"), "--gen", "y x + x", "--gen", "y",
                           "--syzygies"});
  REQUIRE(two.code == 0);
  const auto k = nlohmann::json::parse(two.out);
  std::set<std::string> lms;
  for (const auto& e : k["elements"]) lms.insert(e["leading_monomial"].get<std::string>());
  CHECK(lms == std::set<std::string>{"x", "y"});
  CHECK(k.contains("syzygies"));

  const Result rev = call({"gb", golden, "--gens", "x + y", "--order", "y,x"});
  REQUIRE(rev.code == 0);
  CHECK(nlohmann::json::parse(rev.out)["elements"][0]["leading_monomial"] == "x");

  CHECK(call({"gb", golden, "--gens", "yy"}).code == 1);  // normal form is zero
  CHECK(call({"gb", golden}).code == 1);
  CHECK(call({"gb", golden, "--gens", "x +"}).code == 1);
  CHECK(call({"gb", golden, "--gens", "x", "--order", "x"}).code == 1);
}

TEST_CASE("series") {
  const Result r = call({"series", testing::data_path("golden_mean.txt"), "--horizon", "10"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump().find("\"144\"") != std::string::npos);  // a_10 = F_12
}

TEST_CASE("verify") {
  const Result quick = call({"verify", "--corpus-size", "20", "--gb-instances", "5", "--max-degree", "3"});
  CHECK(quick.code == 0);
  CHECK(count_of(quick.out, "PASS") == 6);

  const Result fault = call({"verify", "--corpus-size", "20", "--gb-instances", "5", "--max-degree", "3",
                             "--inject-fault"});
  CHECK(fault.code == 2);
  CHECK(fault.out.find("FAIL") != std::string::npos);
  CHECK(fault.err.find("witness") != std::string::npos);

  const Result json = call({"verify", "--corpus-size", "10", "--gb-instances", "3", "--max-degree", "3",
                            "--format", "json", "--jobs", "1"});
  CHECK(nlohmann::json::parse(json.out)["schema_version"] == 1);
}
