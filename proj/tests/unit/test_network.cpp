#include <doctest.h>

#include "helpers.hpp"
#include "reference_data.hpp"

using namespace wls;
using namespace wls::test;

namespace {

FuzzyNetwork<UnitValue> six_nodes() {
  const auto p = product();
  return {Universe::numbered(6), {"R"}, RelationFamily<UnitValue>(6, {rel(p, kNetworkR)})};
}

}  // namespace

TEST_SUITE("network") {

TEST_CASE("network construction is validated") {
  const auto p = product();
  CHECK_THROWS_AS(FuzzyNetwork<UnitValue>(Universe::numbered(3), {"R"},
                                          RelationFamily<UnitValue>(2, {identity(p, 2)})),
                  UniverseMismatch);
  CHECK_THROWS_AS(FuzzyNetwork<UnitValue>(Universe::numbered(2), {},
                                          RelationFamily<UnitValue>(2, {identity(p, 2)})),
                  UniverseMismatch);
}

TEST_CASE("factoring by the identity keeps the network") {
  const auto p = product();
  const auto net = six_nodes();
  const auto f = factor(p, net, identity(p, 6));
  CHECK(f.blocks.size() == 6);
  CHECK(f.nodes.names() == net.nodes.names());
  CHECK(f.family[0] == net.family[0]);
}

TEST_CASE("factoring merges nodes with equal rows") {
  const auto p = product();
  const auto net = six_nodes();
  const auto x = rel(p, kPreorderX1);
  const auto f = factor(p, net, x);
  REQUIRE(f.blocks.size() == 5);
  CHECK(f.blocks[1] == std::vector<std::size_t>{1, 3});
  CHECK(f.nodes.name(1) == "n2+n4");
  CHECK(f.block_of == std::vector<std::size_t>{0, 1, 2, 1, 3, 4});
  for (std::size_t a = 0; a < 5; ++a) {
    for (std::size_t b = 0; b < 5; ++b) {
      CHECK(f.family[0](a, b) == factor_label(p, x, net.family[0], f.blocks[a].front(), f.blocks[b].front()));
    }
  }
  // A larger preorder in the same cut gives the same number of blocks.
  CHECK(factor(p, net, rel(p, kLargerPreorder)).blocks.size() == 5);
  CHECK_THROWS_AS(factor(p, net, rel(p, kNetworkR)), InvalidArgument);
}

TEST_CASE("aggregation") {
  const auto p = product();
  const auto net = six_nodes();

  const auto mid = aggregate(p, net, q("3/5"), SystemKind::wls3);
  REQUIRE(mid.network.has_value());
  CHECK(mid.report.result == rel(p, kPreorderX1));
  CHECK(mid.network->blocks.size() == 5);

  const auto low = aggregate(p, net, q("2/5"), SystemKind::wls3);
  REQUIRE(low.network.has_value());
  CHECK(low.report.result == universal(p, 6));
  CHECK(low.network->blocks.size() == 1);
  CHECK(low.network->nodes.name(0) == "n1+n2+n3+n4+n5+n6");

  const auto exact = aggregate(p, net, q("1"), SystemKind::wls3, AggregateMode::preorder, 60);
  CHECK(exact.report.status == SolveStatus::iteration_cap_reached);
  CHECK_FALSE(exact.network.has_value());

  const auto eq = aggregate(p, net, q("1/2"), SystemKind::wls3, AggregateMode::equivalence);
  REQUIRE(eq.network.has_value());
  CHECK(is_equivalence(p, eq.report.result));
}

TEST_CASE("block names are sorted member names") {
  const auto g = godel();
  const FuzzyNetwork<UnitValue> net(Universe({"b", "a", "c"}), {"R"},
                                    RelationFamily<UnitValue>(3, {identity(g, 3)}));
  const auto f = factor(g, net, rel(g, "1 1 0; 1 1 0; 0 0 1"));
  CHECK(f.nodes.names() == std::vector<std::string>{"a+b", "c"});
}

}
