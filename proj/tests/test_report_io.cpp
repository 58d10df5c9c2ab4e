#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncg/json_io.hpp"
#include "ncg/report.hpp"
#include "ncg/verify.hpp"

using namespace ncg;

TEST_CASE("report shape and determinism") {
  Report r;
  r.suite = "demo";
  r.seed = 7;
  r.add_pass("zeta", 12);
  r.add("alpha", CaseStatus::Inconclusive, {}, 3);
  r.add_fail("mid", {{"x", 1}});
  CHECK_FALSE(r.all_ok());

  nlohmann::json j = r.to_json();
  CHECK(j["version"] == "1");  // schema version pin
  CHECK(j["seed"] == 7);
  REQUIRE(j["cases"].size() == 3);
  // Cases come out sorted by name, timing zeroed by default.
  CHECK(j["cases"][0]["name"] == "alpha");
  CHECK(j["cases"][1]["name"] == "mid");
  CHECK(j["cases"][2]["name"] == "zeta");
  CHECK(j["cases"][2]["elapsed_ms"] == 0);
  CHECK(r.to_json(true)["cases"][2]["elapsed_ms"] == 12);
  // Fail entries always carry a witness.
  CHECK(j["cases"][1].contains("witness"));

  Report no_witness;
  no_witness.add("f", CaseStatus::Fail);
  CHECK(no_witness.to_json()["cases"][0].contains("witness"));
}

TEST_CASE("suite reports are byte stable per seed") {
  VerifyOptions opts;
  opts.seed = 5;
  opts.cases = 20;
  std::string once = verify_trees(opts).to_json().dump();
  std::string twice = verify_trees(opts).to_json().dump();
  CHECK(once == twice);
  opts.seed = 6;
  CHECK(verify_trees(opts).all_ok());
}

TEST_CASE("tree JSON round trip and DOT export") {
  nlohmann::json j = {{"nodes",
                       {{{"id", 0}, {"parent", nullptr}, {"level", 0}, {"label", "root"}},
                        {{"id", 1}, {"parent", 0}, {"level", 1}, {"label", "kid"}}}}};
  WfTree t = tree_from_json(j);
  CHECK(t.size() == 2);
  CHECK(tree_from_json(tree_to_json(t)).size() == 2);

  std::string dot = tree_to_dot(t);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("rank=1") != std::string::npos);

  nlohmann::json bad = {{"nodes", {{{"id", 0}, {"parent", nullptr}, {"level", 2}}}}};
  CHECK_THROWS(tree_from_json(bad));
  CHECK_THROWS(tree_from_json(nlohmann::json::array()));
}

TEST_CASE("chain JSON round trip") {
  nlohmann::json j = {{"degree", 3},
                      {"levels",
                       {{{"generators", {{1, 0, 2}, {1, 2, 0}}}},
                        {{"generators", {{0, 2, 1}}}}}}};
  PermGroupChain c = chain_from_json(j);
  CHECK(c.degree() == 3);
  CHECK(c.depth() == 1);
  CHECK(c.group().order() == 6);
  PermGroupChain back = chain_from_json(chain_to_json(c));
  CHECK(back.group().order() == 6);
  CHECK_THROWS(chain_from_json(nlohmann::json{{"degree", 3}}));
}
