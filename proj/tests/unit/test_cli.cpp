#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "reference_data.hpp"
#include "wls/cli.hpp"

using namespace wls;
using namespace wls::test;
using io::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

FuzzyRelation<UnitValue> result_of(const std::string& text) {
  const auto j = Json::parse(text);
  return io::parse_relation(product(), j.at("result"), j.at("nodes").size());
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve") {
  const auto r = run({"solve", "--input", fixture("network6.json"), "--degree", "4/5"});
  REQUIRE(r.code == cli::ok);
  const auto j = Json::parse(r.out);
  CHECK(j.at("status") == "converged");
  CHECK(j.at("iterations") == 3);
  CHECK(result_of(r.out) == rel(product(), kGreatestX2));
}

TEST_CASE("solve-preorder with a trace") {
  const auto r = run({"solve-preorder", "--input", fixture("network6.json"), "--degree", "4/5", "--trace"});
  REQUIRE(r.code == cli::ok);
  const auto j = Json::parse(r.out);
  CHECK(j.at("iterations") == 4);
  CHECK(j.at("step_equalities") == Json::array({"2/5", "50/81", "5/8", "8/9"}));
  CHECK(result_of(r.out) == rel(product(), kPreorderX3));
  CHECK(j.at("trace").size() == 5);
}

TEST_CASE("solve-equivalence") {
  const auto r = run({"solve-equivalence", "--input", fixture("network6.json"), "--degree", "1/2"});
  REQUIRE(r.code == cli::ok);
  CHECK(is_equivalence(product(), result_of(r.out)));
}

TEST_CASE("degree") {
  const auto r = run({"degree", "--input", fixture("three_nodes.json"), "--relation", "X0", "--kind", "3"});
  CHECK(r.code == cli::ok);
  CHECK(r.out == "1/2\n");
  CHECK(run({"degree", "--input", fixture("three_nodes.json"), "--relation", "X1"}).out == "3/4\n");
  CHECK(run({"degree", "--input", fixture("three_nodes.json"), "--relation", "X2"}).out == "2/3\n");
  CHECK(run({"degree", "--input", fixture("three_nodes.json"), "--relation", "X0", "--kind", "10"}).code ==
        cli::input_error);
}

TEST_CASE("aggregate") {
  const auto r = run({"aggregate", "--input", fixture("network6.json"), "--degree", "3/5"});
  REQUIRE(r.code == cli::ok);
  const auto f = Json::parse(r.out).at("factor");
  CHECK(f.at("blocks").size() == 5);
  CHECK(f.at("blocks")[1].at("name") == "n2+n4");
}

TEST_CASE("canonicalize round trip") {
  const auto r = run({"canonicalize", "--input", fixture("network6_preorders.json")});
  REQUIRE(r.code == cli::ok);
  CHECK(io::parse_problem(Json::parse(r.out)) == io::load_problem(fixture("network6_preorders.json")));
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == cli::ok);
  CHECK(run({}).code == cli::input_error);
  CHECK(run({"solve", "--input", fixture("network6.json")}).code == cli::input_error);
  CHECK(run({"solve", "--input", fixture("bad_shape.json"), "--degree", "1/2"}).code == cli::input_error);
  const auto bad = run({"solve-preorder", "--input", fixture("not_preorder.json"), "--degree", "1/2"});
  CHECK(bad.code == cli::input_error);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(run({"solve", "--input", fixture("network6.json"), "--degree", "0.8"}).code == cli::ok);
  CHECK(run({"solve", "--input", fixture("network6.json"), "--degree", "2"}).code == cli::input_error);
  CHECK(run({"solve", "--input", fixture("network6.json"), "--degree", "1", "--max-iter", "50"}).code ==
        cli::not_converged);
  CHECK(run({"aggregate", "--input", fixture("network6.json"), "--degree", "1", "--max-iter", "50"}).code ==
        cli::not_converged);
}

TEST_CASE("oracle-verify") {
  const auto r = run({"oracle-verify", "--lattice", "godel", "--size", "2", "--nodes", "2"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("OK\n") != std::string::npos);
  CHECK(run({"oracle-verify", "--size", "4", "--nodes", "3", "--budget", "1000"}).code == cli::input_error);
}

}
