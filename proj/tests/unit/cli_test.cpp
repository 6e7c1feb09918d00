#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = quadmaps::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST_CASE("cli invariants") {
  const auto r = run({"invariants", "--map", "1,2,0;3,1,1"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r.out);
  CHECK(j["resultant"] == "11");
  CHECK(j["sigma1"] == "20/11");
  CHECK(j["sigma2"] == "-5/11");
  CHECK(j["sigma3"] == "-2/11");
  CHECK(j["fixed_point_form"] == "-3,0,1,0");
}

TEST_CASE("cli density witness") {
  const auto r = run({"density-witness", "--p", "2", "--N", "5"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r.out);
  CHECK(j["sigma1"] == "8186");
  CHECK(j["rows"].size() == 5);
  CHECK(j["rows"][0]["bad_primes"].empty());
  CHECK(run({"density-witness", "--p", "2", "--N", "5"}).out == r.out);
  const auto capped = run({"density-witness", "--p", "2", "--N", "17"});
  CHECK(capped.code == 1);
  CHECK(json_of(capped.err).contains("error"));
  CHECK(run({"density-witness", "--p", "2", "--N", "17", "--max-N", "17"}).code == 0);
  CHECK(run({"density-witness", "--p", "4", "--N", "1"}).code == 1);
}

TEST_CASE("cli sunit-solve") {
  const auto r = run({"sunit-solve", "--S", "2", "--bound", "4"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r.out);
  CHECK(j["solutions"] == nlohmann::json::parse(R"([["-1","2"],["1/2","1/2"],["2","-1"]])"));
  CHECK(j["S"] == nlohmann::json::parse(R"(["2"])"));
  CHECK(j["u_values"] == nlohmann::json::parse(R"(["-1","1/2","2"])"));
  CHECK(json_of(run({"sunit-solve", "--S", "", "--bound", "3"}).out)["solutions"].empty());
}

TEST_CASE("cli conjugate and reduce") {
  const auto c = run({"conjugate", "--map", "1,1,0;0,1,2", "--pgl", "3,0;0,1"});
  REQUIRE(c.code == 0);
  CHECK(json_of(c.out)["conjugate"] == "3,1,0;0,3,2");
  const auto r = run({"reduce", "--map", "1,1,0;0,1,2", "--prime", "2"});
  REQUIRE(r.code == 0);
  CHECK(json_of(r.out)["degree"] == 1);
  CHECK(json_of(r.out)["good"] == false);
  CHECK(run({"reduce", "--map", "1,1,0;0,1,2", "--prime", "9"}).code == 1);
}

TEST_CASE("cli good-reduction") {
  const auto r = run({"good-reduction", "--map", "1,2,0;0,3,1", "--outside-S", "5"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r.out);
  CHECK(j["bad_primes"] == nlohmann::json::parse(R"(["5"])"));
  CHECK(j["good_outside_S"] == true);
  const auto k = json_of(run({"good-reduction", "--map", "1,2,0;0,3,1", "--outside-S", "2,3"}).out);
  CHECK(k["good_outside_S"] == false);
  CHECK_FALSE(json_of(run({"good-reduction", "--map", "1,2,0;0,3,1"}).out).contains("good_outside_S"));
}

TEST_CASE("cli classify") {
  const auto f = run({"classify-fixed", "--map", "1,1,0;0,1,2", "--p1", "1:0", "--p2", "0:1", "--outside-S", "2"});
  REQUIRE(f.code == 0);
  const auto j = json_of(f.out);
  CHECK(j["normal_form"] == "1,1,2");
  CHECK(j["u"] == "1/2");
  CHECK(j["bad_primes"] == nlohmann::json::parse(R"(["2"])"));
  CHECK(j["good_outside_S"] == true);
  CHECK(j["unit_equation_solution"] == true);
  const auto c = run({"classify-cycle", "--map", "0,1,2;1,1,0", "--p1", "0:1", "--p2", "1:0"});
  REQUIRE(c.code == 0);
  CHECK(json_of(c.out)["transform"] == "0,1;1,0");
  CHECK(json_of(c.out)["u"] == "1/2");
  const auto bad = run({"classify-fixed", "--map", "1,0,0;0,0,1", "--p1", "1:0", "--p2", "0:1"});
  CHECK(bad.code == 1);
  CHECK(json_of(bad.err)["error"] == "P1 ramified");
}

TEST_CASE("cli family") {
  const auto c = json_of(run({"family", "--kind", "cpnf", "--p", "2", "--N", "2"}).out);
  CHECK(c["maps"].size() == 2);
  CHECK(c["maps"][1]["map"] == "2,0,1;15,0,8");
  CHECK(c["maps"][1]["resultant"] == "1");
  const auto f = json_of(run({"family", "--kind", "fpnf", "--alpha", "2", "--beta", "3"}).out);
  CHECK(f["resultant"] == "3");
  CHECK(run({"family", "--kind", "fpnf", "--alpha", "2"}).code == 2);
  CHECK(run({"family", "--kind", "other"}).code == 2);
}

TEST_CASE("cli covering-check") {
  const auto r = run({"covering-check", "--S", "2", "--coeff-bound", "3", "--eq-bound", "4"});
  REQUIRE(r.code == 0);
  const auto j = json_of(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["violations"].empty());
  CHECK(j["covering_set"] == nlohmann::json::parse(R"(["-1","1/2","2"])"));
  CHECK(run({"covering-check", "--S", "2,3", "--coeff-bound", "2", "--eq-bound", "0"}).code == 1);
}

TEST_CASE("cli errors and formats") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"invariants", "--map", "1,2,0;3,1,1", "--bogus", "1"}).code == 2);
  const auto malformed = run({"invariants", "--map", "1,2;3,1,1"});
  CHECK(malformed.code == 2);
  CHECK(json_of(malformed.err).contains("error"));
  const auto degenerate = run({"invariants", "--map", "1,0,0;2,0,0"});
  CHECK(degenerate.code == 1);
  CHECK(json_of(degenerate.err)["error"] == "degenerate map");
  CHECK(run({"sunit-solve", "--S", "2", "--bound", "1/2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto csv = run({"sunit-solve", "--S", "2", "--bound", "4", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "x,y\n-1,2\n1/2,1/2\n2,-1\n");
  const auto kv = run({"--format", "csv", "reduce", "--map", "1,1,0;0,1,2", "--prime", "5"});
  REQUIRE(kv.code == 0);
  CHECK(kv.out.rfind("key,value\n", 0) == 0);
  CHECK(kv.out.find("map,\"1,1,0;0,1,2\"\n") != std::string::npos);
  CHECK(run({"reduce", "--map", "1,1,0;0,1,2", "--prime", "5", "--format", "xml"}).code == 2);
}
