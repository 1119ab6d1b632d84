#include <algorithm>
#include <set>

#include "doctest.h"
#include "tensorposet/error.hpp"
#include "tensorposet/poset.hpp"

using namespace tensorposet;

namespace {

Composition comp(const char* text) { return parse_composition(text); }

const Root& root(const RootSystem& rs, std::vector<std::int64_t> coeffs) {
  return rs.positive_roots().at(rs.root_index(coeffs));
}

}  // namespace

TEST_CASE("composition parsing and printing") {
  const auto c = comp("2,0;0,1");
  CHECK(c.k() == 2);
  CHECK(c.total() == Weight{2, 1});
  CHECK(c.str() == "[(2,0);(0,1)]");
  CHECK(sorted_parts(comp("0,1;2,0")) == comp("2,0;0,1"));
}

TEST_CASE("composition enumeration") {
  RootSystem a2(LieType{'A', 2});
  CHECK(enumerate_compositions(a2, Weight{1, 1}, 2).size() == 4);
  CHECK(enumerate_compositions(a2, Weight{3, 2}, 1) == std::vector<Composition>{comp("3,2")});
  RootSystem a1(LieType{'A', 1});
  const auto c = enumerate_compositions(a1, Weight{2}, 2);
  CHECK(std::set<Composition>(c.begin(), c.end()) == std::set<Composition>{comp("2;0"), comp("1;1"), comp("0;2")});
  CHECK(count_compositions(Weight{4, 3}, 3) == BigCount(15 * 10));
  CHECK_THROWS_AS(enumerate_compositions(a2, Weight{40, 40}, 5, 1000), SizeGuardError);
}

TEST_CASE("r values") {
  RootSystem a1(LieType{'A', 1});
  CHECK(r_value(a1, comp("3;2;2"), a1.simple_root(0), 2) == 4);
  CHECK(r_value(a1, comp("3;2;2"), a1.simple_root(0), 3) == 7);
  RootSystem a2(LieType{'A', 2});
  const auto b = comp("0,1;1,2;2,0");
  CHECK(r_value(a2, b, a2.simple_root(0), 1) == 0);
  CHECK(r_value(a2, b, root(a2, {1, 1}), 3) == a2.eval(b.total(), root(a2, {1, 1})));
}

TEST_CASE("preorder and equivalence") {
  RootSystem a1(LieType{'A', 1});
  CHECK(preceq(a1, comp("5;1"), comp("4;2")));
  CHECK_FALSE(preceq(a1, comp("4;2"), comp("5;1")));
  CHECK_FALSE(equivalent(a1, comp("2;0"), comp("1;1")));
  CHECK(equivalent(a1, comp("1;3;2"), comp("3;2;1")));

  RootSystem a2(LieType{'A', 2});
  for (const auto& b : enumerate_compositions(a2, Weight{2, 1}, 3)) {
    CHECK(preceq(a2, comp("2,1;0,0;0,0"), b));
    CHECK(preceq(a2, b, b));
  }
  CHECK(equivalent(a2, comp("0,1;1,2;2,0"), comp("0,2;1,0;2,1")));
}

TEST_CASE("poset of 6 omega_1 in two parts is a chain") {
  RootSystem a1(LieType{'A', 1});
  const auto p = build_poset(a1, Weight{6}, 2);
  REQUIRE(p.nodes.size() == 4);
  std::vector<Composition> canon;
  for (const auto& n : p.nodes) canon.push_back(n.canonical);
  const std::vector<Composition> chain{comp("6;0"), comp("5;1"), comp("4;2"), comp("3;3")};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    CHECK(p.covers(p.find(a1, chain[i]), p.find(a1, chain[i + 1])));
  CHECK(p.cover_edges.size() == 3);
  const auto maxes = maximal_classes(p);
  REQUIRE(maxes.size() == 1);
  CHECK(p.nodes[maxes[0]].canonical == comp("3;3"));
}

TEST_CASE("k = 1 gives a single node") {
  RootSystem b2(LieType{'B', 2});
  CHECK(build_poset(b2, Weight{2, 3}, 1).nodes.size() == 1);
}

TEST_CASE("unique maximum for multiples of a fundamental weight") {
  RootSystem a1(LieType{'A', 1});
  const auto p = build_poset(a1, Weight{7}, 3);
  const auto maxes = maximal_classes(p);
  REQUIRE(maxes.size() == 1);
  CHECK(p.nodes[maxes[0]].canonical == comp("3;2;2"));
  CHECK(lambda_max_fundamental(1, 7, 0, 3) == comp("3;2;2"));
  CHECK(lambda_max_fundamental(1, 6, 0, 3) == comp("2;2;2"));
  CHECK(lambda_max_fundamental(1, 1, 0, 2) == comp("1;0"));
  CHECK(lambda_max_fundamental(2, 5, 1, 2) == comp("0,3;0,2"));
}

TEST_CASE("cover moves") {
  CHECK(cover_move(comp("5;1"), 1, 2) == comp("4;2"));
  CHECK(cover_move(comp("5;2;0"), 1, 3) == comp("4;2;1"));
  CHECK_THROWS_AS(cover_move(comp("3;3"), 1, 2), PreconditionError);
  // (4,1,1) has lambda_1 = lambda_2, so the move with j1 = 1 is not defined.
  CHECK_THROWS_AS(cover_move(comp("4;1;1"), 1, 3), PreconditionError);
  CHECK(cover_move(comp("4;1;1"), 2, 3) == comp("3;2;1"));
}

TEST_CASE("k = 2 criterion") {
  RootSystem a2(LieType{'A', 2});
  const auto b = comp("2,2;0,0");
  CHECK(k2_criterion(a2, b, b));
  CHECK(k2_criterion(a2, b, comp("1,1;1,1")));
  CHECK(preceq(a2, b, comp("1,1;1,1")));
}

TEST_CASE("row shuffle and partitions") {
  CHECK(row_shuffle_partitions({3, 1}, {2, 2}) == std::pair<Partition, Partition>{{3, 2}, {2, 1}});
  CHECK(row_shuffle_partitions({4, 2, 1}, {4, 2, 1}) == std::pair<Partition, Partition>{{4, 2, 1}, {4, 2, 1}});
  CHECK(row_shuffle_partitions({5}, {2}) == std::pair<Partition, Partition>{{5}, {2}});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(conjugate({4, 4, 2, 1})) == Partition{4, 4, 2, 1});
  CHECK(partition_from_weight(Weight{1, 0}) == Partition{1, 0, 0});
  CHECK(partition_from_weight(Weight{1, 1}) == Partition{2, 1, 0});
  for (const auto& w : weights_in_box(3, 2)) CHECK(weight_from_partition(partition_from_weight(w), 3) == w);
}

TEST_CASE("type A maximum") {
  RootSystem a2(LieType{'A', 2});
  CHECK(lambda_max_typeA(a2, Weight{2, 4}) == comp("1,2;1,2"));
  CHECK(lambda_max_typeA(a2, Weight{1, 1}) == comp("1,0;0,1"));
  CHECK(lambda_max_typeA(a2, Weight{3, 3}) == comp("2,1;1,2"));
  for (const auto& lambda : weights_in_box(2, 3)) {
    const auto p = build_poset(a2, lambda, 2);
    const auto maxes = maximal_classes(p);
    REQUIRE(maxes.size() == 1);
    CHECK(p.find(a2, lambda_max_typeA(a2, lambda)) == maxes[0]);
  }
}

TEST_CASE("halves of an even weight form a maximal class") {
  RootSystem a2(LieType{'A', 2});
  const auto p = build_poset(a2, Weight{2, 2}, 2);
  const auto maxes = maximal_classes(p);
  CHECK(std::find(maxes.begin(), maxes.end(), p.find(a2, comp("1,1;1,1"))) != maxes.end());
}

TEST_CASE("intermediate element") {
  RootSystem a2(LieType{'A', 2});
  const auto b = comp("3,0;0,0");
  const auto m = lambda_max_typeA(a2, Weight{3, 0});
  const auto x = intermediate_element(a2, b, m, {}, 0);
  CHECK(x == comp("2,0;1,0"));
  CHECK(preceq(a2, b, x));
  CHECK(preceq(a2, x, m));
  CHECK_THROWS_AS(intermediate_element(a2, m, b, {}, 0), PreconditionError);
}

TEST_CASE("intermediate elements stay dominant and in between") {
  RootSystem a2(LieType{'A', 2});
  std::size_t produced = 0;
  for (const auto& lambda : weights_in_box(2, 3)) {
    const auto comps = enumerate_compositions(a2, lambda, 2);
    for (const auto& b : comps) {
      for (const auto& m : comps) {
        for (std::vector<std::size_t> word : {std::vector<std::size_t>{}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}}) {
          for (std::size_t i0 = 0; i0 < 2; ++i0) {
            Composition x;
            try {
              x = intermediate_element(a2, b, m, word, i0);
            } catch (const PreconditionError&) {
              continue;
            }
            ++produced;
            CHECK(x.parts[0].is_dominant());
            CHECK(x.parts[1].is_dominant());
            CHECK(preceq(a2, b, x));
            CHECK(preceq(a2, x, m));
            CHECK_FALSE(equivalent(a2, b, x));
          }
        }
      }
    }
  }
  CHECK(produced > 0);
}

TEST_CASE("k = 3 classes that are larger than S_3 orbits") {
  RootSystem a2(LieType{'A', 2});
  const auto p = build_poset(a2, Weight{3, 3}, 3);
  std::vector<std::set<Composition>> merged;
  for (const auto& n : p.nodes) {
    std::set<Composition> orbits;
    for (const auto& m : n.members) orbits.insert(sorted_parts(m));
    if (orbits.size() > 1) merged.push_back(orbits);
  }
  REQUIRE(merged.size() == 1);
  CHECK(merged[0] == std::set<Composition>{sorted_parts(comp("0,1;1,2;2,0")), sorted_parts(comp("0,2;1,0;2,1"))});
}
