#include <numeric>

#include "doctest.h"
#include "tensorposet/error.hpp"
#include "tensorposet/oracle.hpp"
#include "tensorposet/repdim.hpp"

using namespace tensorposet;

TEST_CASE("Weyl dimension in small cases") {
  RootSystem a1(LieType{'A', 1});
  for (std::int64_t r = 0; r <= 20; ++r) CHECK(weyl_dim(a1, Weight{r}) == r + 1);
  RootSystem a2(LieType{'A', 2});
  CHECK(weyl_dim(a2, Weight{1, 1}) == 8);
  CHECK(weyl_dim(a2, Weight{2, 0}) == 6);
  CHECK(weyl_dim(a2, Weight{0, 0}) == 1);
}

TEST_CASE("Weyl dimension agrees with the Freudenthal character") {
  for (const auto* name : {"A3", "B2", "C3", "G2"}) {
    RootSystem rs(LieType::parse(name));
    for (const auto& lambda : weights_in_box(rs.rank(), 2)) {
      CAPTURE(lambda);
      CHECK(weyl_dim(rs, lambda) == freudenthal(rs, lambda).total(rs));
    }
  }
}

TEST_CASE("large weights stay exact") {
  RootSystem e8(LieType{'E', 8});
  Weight big(8);
  for (std::size_t i = 0; i < 8; ++i) big[i] = 50;
  const BigCount d = weyl_dim(e8, big);
  CHECK(d > BigCount(std::numeric_limits<std::uint64_t>::max()));
  RootSystem g2(LieType{'G', 2});
  CHECK(weyl_dim(g2, Weight{1, 0}) * weyl_dim(g2, Weight{0, 1}) == 7 * 14);
}

TEST_CASE("dimension of a composition") {
  RootSystem a1(LieType{'A', 1});
  CHECK(dim_product(a1, parse_composition("5;1")) == 12);
  CHECK(dim_product(a1, parse_composition("4;2")) == 15);
  RootSystem a2(LieType{'A', 2});
  CHECK(dim_product(a2, parse_composition("1,0;0,1")) == 9);
  CHECK(dim_product(a2, parse_composition("2,3;0,0;0,0")) == weyl_dim(a2, Weight{2, 3}));
}

TEST_CASE("sl2 reduction") {
  RootSystem a1(LieType{'A', 1});
  CHECK(sl2_reduction(a1, parse_composition("5;1"), a1.simple_root(0)) == std::vector<std::int64_t>{5, 1});
  RootSystem a2(LieType{'A', 2});
  const Root& top = a2.positive_roots().at(a2.root_index({1, 1}));
  CHECK(sl2_reduction(a2, parse_composition("1,0;0,1"), top) == std::vector<std::int64_t>{2, 2});

  RootSystem b2(LieType{'B', 2});
  for (const auto& alpha : b2.positive_roots()) {
    std::int64_t first = -1;
    for (const auto& c : enumerate_compositions(b2, Weight{2, 3}, 3)) {
      const auto v = sl2_reduction(b2, c, alpha);
      const auto sum = std::accumulate(v.begin(), v.end(), std::int64_t{0});
      if (first < 0) first = sum;
      CHECK(sum == first);
    }
  }
}

TEST_CASE("dimension comparison") {
  RootSystem a1(LieType{'A', 1});
  CHECK(compare_dims(a1, parse_composition("5;1"), parse_composition("4;2")) == DimOrder::Less);
  CHECK(compare_dims(a1, parse_composition("1;5"), parse_composition("5;1")) == DimOrder::Equal);
  CHECK_THROWS_AS(compare_dims(a1, parse_composition("4;2"), parse_composition("5;1")), PreconditionError);

  RootSystem a2(LieType{'A', 2});
  for (const auto& lambda : weights_in_box(2, 3)) {
    for (std::size_t k = 2; k <= 3; ++k) {
      const auto comps = enumerate_compositions(a2, lambda, k);
      for (const auto& b : comps) {
        for (const auto& m : comps) {
          if (!preceq(a2, b, m)) continue;
          const auto order = compare_dims(a2, b, m);
          CHECK((order == DimOrder::Equal) == (dim_product(a2, b) == dim_product(a2, m)));
          CHECK((order == DimOrder::Equal) == equivalent(a2, b, m));
        }
      }
    }
  }
}
