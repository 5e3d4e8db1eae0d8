#include <doctest.h>

#include "helpers.hpp"
#include "reference_data.hpp"

using namespace wls;
using namespace wls::test;

TEST_SUITE("degree") {

TEST_CASE("three-node preorders") {
  const auto p = product();
  const RelationFamily<UnitValue> s(3, {rel(p, kSmallR)});
  const auto x0 = rel(p, kSmallX0), x1 = rel(p, kSmallX1), x2 = rel(p, kSmallX2);
  const auto j = join(p, x1, x2);

  CHECK(sd(p, 3, s, x0) == q("1/2"));
  CHECK(sd(p, 3, s, x1) == q("3/4"));
  CHECK(sd(p, 3, s, x2) == q("2/3"));
  CHECK(sd(p, 3, s, j) == q("2/3"));
  CHECK(in_cut(p, 3, s, x1, q("3/4"), x0));
  CHECK(in_cut(p, 3, s, x2, q("2/3"), x0));
  CHECK(in_cut(p, 3, s, j, q("2/3"), x0));
  CHECK_FALSE(in_cut(p, 3, s, x0, q("2/3"), x0));
  CHECK(in_cut(p, 3, s, x0, q("0"), x0));
  CHECK_FALSE(in_cut(p, 3, s, universal(p, 3), q("0"), x0));
}

TEST_CASE("kinds three, six and nine are meets") {
  const auto p = product();
  const RelationFamily<UnitValue> s(6, {rel(p, kNetworkR)});
  for (const char* x : {kGreatestX1, kPreorderX1, kPreorderX3}) {
    const auto r = rel(p, x);
    CHECK(sd(p, 3, s, r) == p.meet(sd(p, 1, s, r), sd(p, 2, s, r)));
    CHECK(sd(p, 6, s, r) == p.meet(sd(p, 4, s, r), sd(p, 5, s, r)));
    CHECK(sd(p, 9, s, r) == p.meet(sd(p, 7, s, r), sd(p, 8, s, r)));
  }
}

TEST_CASE("identity solves every system exactly") {
  const auto p = product();
  const RelationFamily<UnitValue> s(6, {rel(p, kNetworkR), universal(p, 6)});
  for (int k = 1; k <= 9; ++k) CHECK(sd(p, k, s, identity(p, 6)) == q("1"));
}

TEST_CASE("greatest solution meets its degree") {
  const auto p = product();
  const RelationFamily<UnitValue> s(6, {rel(p, kNetworkR)});
  CHECK(p.leq(q("4/5"), sd(p, 3, s, rel(p, kGreatestX2))));
  CHECK_FALSE(p.leq(q("4/5"), sd(p, 3, s, rel(p, kGreatestX1))));
}

TEST_CASE("families") {
  const auto p = product();
  const RelationFamily<UnitValue> empty(2);
  CHECK(sd(p, 3, empty, universal(p, 2)) == q("1"));
  CHECK(family_equality_degree(p, empty, empty) == q("1"));

  const RelationFamily<UnitValue> a(1, {rel(p, "1")}), b(1, {rel(p, "1/2")});
  CHECK(family_equality_degree(p, a, b) == q("1/2"));
  CHECK(family_equality_degree(p, a, a) == q("1"));
  CHECK_THROWS_AS(family_equality_degree(p, a, RelationFamily<UnitValue>(1)), UniverseMismatch);

  RelationFamily<UnitValue> f(2);
  CHECK_THROWS_AS(f.add(identity(p, 3)), UniverseMismatch);
  CHECK_THROWS_AS(sd(p, 3, RelationFamily<UnitValue>(2, {identity(p, 2)}), identity(p, 3)),
                  UniverseMismatch);
  CHECK_THROWS_AS(sd(p, 10, empty, identity(p, 2)), InvalidArgument);
  CHECK_THROWS_AS(sd(p, 0, empty, identity(p, 2)), InvalidArgument);
}

TEST_CASE("system kind names") {
  CHECK(parse_system_kind("wls2") == SystemKind::wls2);
  CHECK(parse_system_kind("3") == SystemKind::wls3);
  CHECK(to_string(SystemKind::wls1) == "wls1");
  CHECK_THROWS_AS(parse_system_kind("wls4"), ParseError);
}

}
