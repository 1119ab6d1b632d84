#include <set>

#include "doctest.h"
#include "tensorposet/error.hpp"
#include "tensorposet/lspath.hpp"
#include "tensorposet/oracle.hpp"
#include "tensorposet/repdim.hpp"

using namespace tensorposet;

namespace {

LSPath straight(const Weight& nu) { return LSPath{{nu}, {Rational(0), Rational(1)}}; }

}  // namespace

TEST_CASE("orbit of omega_1 in A2 is a chain") {
  RootSystem a2(LieType{'A', 2});
  OrbitPoset orbit(a2, a2.fundamental(0));
  REQUIRE(orbit.size() == 3);
  const auto top = orbit.index(Weight{1, 0});
  const auto mid = orbit.index(Weight{-1, 1});
  const auto bottom = orbit.index(Weight{0, -1});
  CHECK(orbit.dist(top, top) == 0);
  CHECK(orbit.dist(mid, top) == 1);
  CHECK(orbit.dist(bottom, mid) == 1);
  CHECK(orbit.dist(bottom, top) == 2);
  CHECK(orbit.dist(top, bottom) == -1);
  CHECK(orbit.greater(bottom, top));
  CHECK_FALSE(orbit.greater(top, bottom));
}

TEST_CASE("a-chains for a minuscule shape") {
  RootSystem a2(LieType{'A', 2});
  const Weight shape{2, 0};
  OrbitPoset orbit(a2, shape);
  for (std::size_t mu = 0; mu < orbit.size(); ++mu) {
    for (std::size_t nu = 0; nu < orbit.size(); ++nu) {
      if (!orbit.greater(mu, nu)) continue;
      CHECK(orbit.a_chain_exists(mu, nu, Rational(1, 2)));
      CHECK_FALSE(orbit.a_chain_exists(mu, nu, Rational(1, 3)));
    }
  }
}

TEST_CASE("path counts in A2") {
  RootSystem a2(LieType{'A', 2});
  const auto p1 = enumerate_ls_paths(a2, Weight{1, 0});
  CHECK(p1.size() == 3);
  for (const auto& p : p1) CHECK(p.nus.size() == 1);

  const auto p2 = enumerate_ls_paths(a2, Weight{2, 0});
  REQUIRE(p2.size() == 6);
  std::size_t two_segment = 0;
  for (const auto& p : p2) {
    if (p.nus.size() == 2) {
      ++two_segment;
      CHECK(p.breaks[1] == Rational(1, 2));
    }
  }
  CHECK(two_segment == 3);

  for (std::int64_t n = 1; n <= 5; ++n) CHECK(BigCount(enumerate_ls_paths(a2, Weight{n, 0}).size()) == weyl_dim(a2, Weight{n, 0}));
  CHECK(enumerate_ls_paths(a2, Weight{0, 0}).size() == 1);
  CHECK(BigCount(enumerate_ls_paths(a2, Weight{1, 1}).size()) == 8);
  CHECK(BigCount(enumerate_ls_paths(a2, Weight{2, 1}).size()) == weyl_dim(a2, Weight{2, 1}));
}

TEST_CASE("non-minuscule shapes in higher rank are unsupported") {
  RootSystem b3(LieType{'B', 3});
  CHECK_THROWS_AS(enumerate_ls_paths(b3, Weight{0, 1, 0}), UnsupportedError);
}

TEST_CASE("path evaluation") {
  RootSystem a2(LieType{'A', 2});
  // The dominant shape is the least element of the orbit order, so it comes last.
  const LSPath p{{Weight{-2, 2}, Weight{2, 0}}, {Rational(0), Rational(1, 2), Rational(1)}};
  OrbitPoset orbit(a2, Weight{2, 0});
  CHECK(is_ls_path(orbit, p));
  CHECK_FALSE(is_ls_path(orbit, LSPath{{Weight{2, 0}, Weight{-2, 2}}, p.breaks}));
  CHECK_FALSE(is_ls_path(orbit, LSPath{p.nus, {Rational(0), Rational(1, 3), Rational(1)}}));
  CHECK(path_eval(p, Rational(0)) == std::vector<Rational>{0, 0});
  CHECK(path_eval(p, Rational(1, 4)) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK(path_eval(p, Rational(3, 4)) == std::vector<Rational>{Rational(-1, 2), Rational(1)});
  CHECK(path_endpoint(p) == Weight{0, 1});
  CHECK(path_endpoint(straight(Weight{1, 0})) == Weight{1, 0});
}

TEST_CASE("dominance of a shifted path") {
  CHECK_FALSE(is_xi_dominant(straight(Weight{-1, 1}), Weight{0, 0}));
  CHECK(is_xi_dominant(straight(Weight{1, 0}), Weight{0, 0}));
  CHECK(is_xi_dominant(straight(Weight{-1, 1}), Weight{1, 0}));
  CHECK(is_xi_dominant(straight(Weight{-3, 3}), Weight{3, 0}));
}

TEST_CASE("dominant path counts") {
  RootSystem a2(LieType{'A', 2});
  CHECK(count_dominant_paths(a2, Weight{1, 0}, Weight{2, 0}, Weight{3, 0}) == 1);
  CHECK(count_dominant_paths(a2, Weight{1, 0}, Weight{0, 1}, Weight{0, 0}) == 1);
  TensorOracle oracle(a2);
  for (std::int64_t n = 1; n <= 3; ++n) {
    const auto paths = enumerate_ls_paths(a2, Weight{n, 0});
    for (const auto& xi : weights_in_box(2, 3)) {
      const auto counts = dominant_path_counts(paths, xi);
      std::map<Weight, BigCount> expected;
      for (const auto& [nu, c] : oracle.full_decomposition(Weight{n, 0}, xi)) expected[nu] = c;
      CHECK(counts == expected);
    }
  }
}

TEST_CASE("the map iota_r") {
  RootSystem a2(LieType{'A', 2});
  const auto merged = iota_r(a2, straight(Weight{1, 0}), 1, 0);
  CHECK(merged == straight(Weight{2, 0}));

  const auto moved = iota_r(a2, straight(Weight{-1, 1}), 1, 0);
  OrbitPoset orbit(a2, Weight{2, 0});
  CHECK(is_ls_path(orbit, moved));
  CHECK(moved.nus.size() == 2);
  CHECK(moved.breaks == std::vector<Rational>{0, Rational(1, 2), 1});
  CHECK(path_endpoint(moved) == Weight{-1, 1} + Weight{1, 0});

  for (std::int64_t r = 1; r <= 3; ++r) {
    OrbitPoset target(a2, Weight{r + 1, 0});
    std::set<LSPath, decltype([](const LSPath& x, const LSPath& y) { return x < y; })> images;
    const auto paths = enumerate_ls_paths(a2, Weight{r, 0});
    for (const auto& p : paths) {
      const auto q = iota_r(a2, p, r, 0);
      CHECK(is_ls_path(target, q));
      CHECK(path_endpoint(q) == path_endpoint(p) + Weight{1, 0});
      images.insert(q);
    }
    CHECK(images.size() == paths.size());
  }
}

TEST_CASE("injection of dominant path sets") {
  for (const auto* name : {"A2", "A3"}) {
    RootSystem rs(LieType::parse(name));
    for (std::int64_t s = 1; s <= 4; ++s) {
      for (std::int64_t r = 0; r < s; ++r) {
        const auto report = verify_prop_min(rs, r, s, 0);
        CHECK(report.ok());
        CHECK_FALSE(report.entries.empty());
      }
    }
  }
}
