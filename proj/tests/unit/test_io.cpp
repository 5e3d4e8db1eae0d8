#include <doctest.h>

#include "helpers.hpp"
#include "reference_data.hpp"

using namespace wls;
using namespace wls::test;
using io::Json;

namespace {

Json problem_text(const char* text) { return Json::parse(text); }

}  // namespace

TEST_SUITE("io") {

TEST_CASE("fixtures survive a serialize and parse round trip") {
  for (const char* name : {"network6.json", "network6_preorders.json", "three_nodes.json", "not_preorder.json"}) {
    CAPTURE(name);
    const auto p = io::load_problem(fixture(name));
    const auto json = io::problem_to_json(p);
    CHECK(io::parse_problem(json) == p);
    CHECK(io::parse_problem(Json::parse(io::pretty(json))) == p);
  }
}

TEST_CASE("fixture contents") {
  const auto any = io::load_problem(fixture("network6.json"));
  const auto& p = std::get<io::Problem<ProductLattice>>(any);
  CHECK(p.nodes.names() == std::vector<std::string>{"n1", "n2", "n3", "n4", "n5", "n6"});
  CHECK(p.relation("R") == rel(product(), kNetworkR));
  CHECK(p.family == std::vector<std::string>{"R"});
  CHECK_FALSE(p.x0.has_value());
  CHECK(p.relation("universal") == universal(product(), 6));
  CHECK_THROWS_AS(p.relation("S"), ParseError);
  CHECK_THROWS_AS(io::load_problem(fixture("bad_shape.json")), ParseError);
  CHECK_THROWS_AS(io::load_problem(fixture("missing.json")), ParseError);
}

TEST_CASE("values") {
  const GodelLattice g;
  CHECK(io::parse_value(g, Json("9/10")) == q("9/10"));
  CHECK(io::parse_value(g, Json("0.25")) == q("1/4"));
  CHECK(io::parse_value(g, Json(1)) == q("1"));
  CHECK(io::parse_value(g, Json(0)) == q("0"));
  CHECK_THROWS_AS(io::parse_value(g, Json(0.5)), ParseError);
  CHECK_THROWS_AS(io::parse_value(g, Json(2)), ParseError);
  CHECK_THROWS_AS(io::parse_value(g, Json("3/2")), ParseError);
  CHECK(io::relation_to_json(g, rel(g, "1 2/4; 0 1")).dump() == R"([["1","1/2"],["0","1"]])");
}

TEST_CASE("default nodes and family") {
  const auto any = io::parse_problem(problem_text(R"({
    "lattice": "lukasiewicz",
    "relations": {"A": [["1", "0"], ["0", "1"]], "B": [["1", "1"], ["1", "1"]]},
    "x0": "B"})"));
  const auto& p = std::get<io::Problem<LukasiewiczLattice>>(any);
  CHECK(p.nodes.names() == std::vector<std::string>{"n1", "n2"});
  CHECK(p.family == std::vector<std::string>{"A"});
  CHECK(p.x0 == "B");
}

TEST_CASE("finite lattices") {
  const auto chain = io::parse_lattice(problem_text(R"({"chain": "godel", "size": 4})"));
  CHECK(std::get<FiniteLattice>(chain) == FiniteLattice::godel_chain(4));

  const auto diamond = io::parse_lattice(problem_text(R"({
    "elements": ["0", "a", "b", "1"],
    "order": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]],
    "otimes": "meet"})"));
  CHECK(std::get<FiniteLattice>(diamond) == FiniteLattice::diamond());

  for (const auto& lat : {FiniteLattice::lukasiewicz_chain(5), FiniteLattice::diamond()}) {
    const auto json = io::lattice_to_json(lat);
    CHECK(std::get<FiniteLattice>(io::parse_lattice(json)) == lat);
  }

  CHECK_THROWS_AS(io::parse_lattice(problem_text(R"({
    "elements": ["0", "a", "b"], "order": [["0", "a"], ["0", "b"]], "otimes": "meet"})")),
                  InvalidLattice);
  CHECK_THROWS_AS(io::parse_lattice(problem_text(R"({"chain": "product", "size": 3})")), ParseError);
  CHECK_THROWS_AS(io::parse_lattice(Json("heyting")), ParseError);

  const auto any = io::parse_problem(problem_text(R"({
    "lattice": {"chain": "godel", "size": 3},
    "relations": {"R": [["1", "1/2"], ["0", "1"]]}})"));
  CHECK(io::parse_problem(io::problem_to_json(any)) == any);
  CHECK_THROWS_AS(io::parse_problem(problem_text(R"({
    "lattice": {"chain": "godel", "size": 3},
    "relations": {"R": [["1", "1/3"], ["0", "1"]]}})")),
                  ParseError);
}

TEST_CASE("malformed problems") {
  CHECK_THROWS_AS(io::parse_problem(Json::array()), ParseError);
  CHECK_THROWS_AS(io::parse_problem(problem_text(R"({"relations": {"R": [["1"]]}})")), ParseError);
  CHECK_THROWS_AS(io::parse_problem(problem_text(R"({"lattice": "godel", "relations": {}})")), ParseError);
  CHECK_THROWS_AS(io::parse_problem(problem_text(
                      R"({"lattice": "godel", "relations": {"identity": [["1"]]}})")),
                  ParseError);
  CHECK_THROWS_AS(io::parse_problem(problem_text(
                      R"({"lattice": "godel", "nodes": ["a", "b"], "relations": {"R": [["1"]]}})")),
                  ParseError);
  CHECK_THROWS_AS(io::parse_problem(problem_text(
                      R"({"lattice": "godel", "relations": {"R": [["1", "0"], ["0"]]}})")),
                  ParseError);
  CHECK_THROWS_AS(io::parse_problem(problem_text(
                      R"({"lattice": "godel", "relations": {"R": [["1"]]}, "x0": "Q"})")),
                  ParseError);
  CHECK_THROWS_AS(io::parse_problem(problem_text(
                      R"({"lattice": "godel", "relations": {"R": [["1"]]}, "family": ["R", "Q"]})")),
                  ParseError);
  CHECK_THROWS_AS(io::parse_problem(problem_text(
                      R"({"lattice": "godel", "nodes": ["a", "a"], "relations": {"R": [["1", "1"], ["1", "1"]]}})")),
                  Error);
}

TEST_CASE("pretty printing keeps rows on one line") {
  const Json j = problem_text(R"({"a": [["1", "0"], ["0", "1"]], "b": [], "c": {}})");
  CHECK(io::pretty(j) == "{\n  \"a\": [\n    [\"1\", \"0\"],\n    [\"0\", \"1\"]\n  ],\n  \"b\": [],\n  \"c\": {}\n}");
  CHECK(Json::parse(io::pretty(j)) == j);
}

}
