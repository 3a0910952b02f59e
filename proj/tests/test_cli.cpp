#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "amc/cli.hpp"
#include "amc/json_io.hpp"

#ifndef AMC_TEST_DATA
#error "AMC_TEST_DATA must point at tests/data"
#endif

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = amc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(AMC_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("diagonal with every method on L_1") {
  const auto r = run({"diagonal", "--method", "all", data("l1.json")});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const json expected = json::parse(R"([["2","-1"],["-1","1"]])");
  CHECK(j["diagonal"] == expected);
  for (const char* m : {"recursive", "moebius", "solver"}) CHECK(j["by_method"][m] == expected);
  CHECK(j["perm"] == json::parse("[0,1]"));
  CHECK(j["am"] == "5");
}

TEST_CASE("am of the six-element example") {
  const auto r = run({"am", data("six_element.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "41\n");
}

TEST_CASE("validate reports violations with exit 2") {
  const auto r = run({"validate", data("broken_commutativity.json")});
  CHECK(r.code == 2);
  const json j = json::parse(r.out);
  CHECK(j["ok"] == false);
  CHECK(j["violations"][0]["axiom"] == "commutative");
  CHECK(j["violations"][0]["witness"] == json::parse("[1,2]"));
}

TEST_CASE("clifford G_2") {
  const auto r = run({"clifford", data("g2.json")});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["am"] == "43");
  CHECK(j["collapse_matches_skeleton"] == true);
  CHECK(j["diagonal"][0][3] == "-1/2");
  CHECK(j["diagonal"][3][3] == "3/2");
  CHECK(j["diagonal"][4][4] == "1/2");
  CHECK(run({"am", data("g2.json")}).out == "43\n");
}

TEST_CASE("moebius, unit and product") {
  const auto m = run({"moebius", data("l1.json")});
  REQUIRE(m.code == 0);
  CHECK(json::parse(m.out)["mu"] == json::parse("[[0,0,1],[0,1,-1],[1,1,1]]"));
  const auto u = run({"unit", "--method", "all", R"({"n":3,"hasse":[[1,0],[2,0]]})"});
  REQUIRE(u.code == 0);
  CHECK(json::parse(u.out)["unit"] == json::parse(R"(["-1","1","1"])"));
  const auto p = run({"product", data("l1.json"), data("l1.json")});
  REQUIRE(p.code == 0);
  CHECK(json::parse(p.out)["am"] == "25");
}

TEST_CASE("verify accepts the diagonal and rejects a perturbation") {
  CHECK(run({"verify", data("l1.json"), "--matrix", R"([[2,-1],[-1,1]])"}).code == 0);
  const auto bad = run({"verify", data("l1.json"), "--matrix", R"([["2","-1/2"],[-1,1]])"});
  CHECK(bad.code == 2);
  CHECK(json::parse(bad.out)["ok"] == false);
}

TEST_CASE("spectrum csv columns") {
  const auto r = run({"spectrum", "--max-size", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("size,class_id,am,mod4,unital,meets_2s_minus_1,meets_4s_minus_3\n", 0) == 0);
  CHECK(r.out.find("2,0,5,1,true,true,true\n") != std::string::npos);
}

TEST_CASE("gap search json report") {
  const auto r = run({"gap-search", "--skeleton-max", "2", "--max-order", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["in_gap"].empty());
  CHECK(j["family"]["max_cyclic_order"] == 3);
}

TEST_CASE("error exits") {
  CHECK(run({"am", data("missing.json")}).code == 4);
  CHECK(run({"am", "{not json"}).code == 4);
  CHECK(run({"am", R"({"n":2})"}).code == 4);
  CHECK(run({"frobnicate"}).code == 4);
  CHECK(run({"diagonal", R"({"n":3,"table":[[0,0,0],[0,1,0],[0,1,2]]})"}).code == 2);
  CHECK(run({"clifford", R"({"skeleton":{"n":1,"table":[[0]]},"groups":[{"cyclic":[0]}]})"}).code == 4);
}

TEST_CASE("output is deterministic") {
  const auto a = run({"diagonal", "--method", "all", data("six_element.json")});
  const auto b = run({"diagonal", "--method", "all", data("six_element.json")});
  CHECK(a.out == b.out);
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("gen_images") != std::string::npos);
}

TEST_CASE("json round trip of a semilattice") {
  const auto s = amc::io::semilattice_from_json(amc::io::load(data("six_element.json"))).value();
  const auto back = amc::io::semilattice_from_json(amc::io::to_json(s)).value();
  CHECK(back == s);
  CHECK(back.label(5) == "1");
  CHECK_THROWS_AS(amc::io::semilattice_from_json(json::parse(R"({"table":[[0.5]]})")), amc::io::ParseError);
}
