#include <set>

#include "doctest.h"
#include "tensorposet/error.hpp"
#include "tensorposet/oracle.hpp"
#include "tensorposet/repdim.hpp"
#include "tensorposet/tableaux_a2.hpp"

using namespace tensorposet;
using namespace tensorposet::a2;

TEST_CASE("tableau sets have the module dimension") {
  CHECK(enumerate_bt(Weight{1, 0}).size() == 3);
  CHECK(enumerate_bt(Weight{0, 0}) == std::vector<Tab5>{Tab5{}});
  CHECK(enumerate_bt(Weight{1, 1}).size() == 8);
  RootSystem a2(LieType{'A', 2});
  for (const auto& lambda : weights_in_box(2, 5)) CHECK(BigCount(enumerate_bt(lambda).size()) == weyl_dim(a2, lambda));
  for (const auto& t : enumerate_bt(Weight{2, 3})) CHECK(in_bt(t, Weight{2, 3}));
}

TEST_CASE("weight filter") {
  const auto ts = enumerate_bt(Weight{1, 1});
  const auto zero = filter_weight(ts, Weight{0, 0});
  CHECK(zero.size() == 2);
  CHECK(filter_weight(ts, Weight{1, 1}).size() == 1);
  RootSystem a2(LieType{'A', 2});
  for (const auto& lambda : weights_in_box(2, 3)) {
    const auto all = enumerate_bt(lambda);
    const auto chi = freudenthal(a2, lambda);
    for (const auto& [nu, m] : chi.expand(a2)) {
      const auto same = filter_weight(all, nu);
      CHECK(static_cast<Multiplicity>(same.size()) == m);
      for (const auto& t : same) {
        CHECK(t.s11 == same.front().s11);
        CHECK(t.s12 + t.s22 == same.front().s12 + same.front().s22);
        CHECK(t.s13 + t.s23 == same.front().s13 + same.front().s23);
      }
    }
  }
}

TEST_CASE("Littlewood-Richardson tableaux") {
  CHECK(lr_tableaux(Weight{1, 0}, Weight{0, 1}, Weight{0, 0}).size() == 1);
  CHECK(lr_tableaux(Weight{2, 1}, Weight{0, 0}, Weight{2, 1}).size() == 1);
  CHECK(lr_tableaux(Weight{2, 1}, Weight{0, 0}, Weight{0, 2}).empty());
  RootSystem a2(LieType{'A', 2});
  TensorOracle oracle(a2);
  for (const auto& lambda : weights_in_box(2, 3)) {
    for (const auto& mu : weights_in_box(2, 3)) {
      const auto expected = oracle.full_decomposition(lambda, mu);
      for (const auto& nu : weights_in_box(2, 6)) {
        const auto it = expected.find(nu);
        const Multiplicity c = it == expected.end() ? 0 : it->second;
        CHECK(static_cast<Multiplicity>(lr_tableaux(lambda, mu, nu).size()) == c);
      }
    }
  }
}

TEST_CASE("simple reflections on weights") {
  CHECK(apply(Reflection::Id, Weight{2, 3}) == Weight{2, 3});
  CHECK(apply(Reflection::S1, Weight{2, 3}) == Weight{-2, 5});
  CHECK(apply(Reflection::S2, Weight{2, 3}) == Weight{5, -3});
  CHECK(to_string(Reflection::S1) == "s1");
}

TEST_CASE("cover normal form") {
  RootSystem a2(LieType{'A', 2});
  const auto nf = cover_normal_form(a2, parse_composition("2,0;0,0"), parse_composition("1,0;1,0"));
  CHECK(nf.w == Reflection::Id);
  CHECK(nf.a == 1);
  CHECK_FALSE(nf.dualized);
  CHECK_THROWS_AS(cover_normal_form(a2, parse_composition("1,0;1,0"), parse_composition("2,0;0,0")), PreconditionError);

  bool saw_dual = false;
  for (const auto& lambda : weights_in_box(2, 3)) {
    const auto p = build_poset(a2, lambda, 2);
    for (const auto& [lo, hi] : p.cover_edges) {
      const auto f = cover_normal_form(a2, p.nodes[lo].canonical, p.nodes[hi].canonical);
      saw_dual = saw_dual || f.dualized;
      CHECK(equivalent(a2, f.lower, f.dualized ? Composition{{a2.minus_w0(p.nodes[lo].canonical.parts[0]),
                                                               a2.minus_w0(p.nodes[lo].canonical.parts[1])}}
                                                         : p.nodes[lo].canonical));
    }
  }
  CHECK(saw_dual);
}

TEST_CASE("shift values") {
  CHECK(shift_ell_t1k(Weight{2, 0}, 1, std::vector<Tab5>{}) == 1);
  CHECK(shift_ell_t2k(Weight{2, 0}, 1, std::vector<Tab5>{}) == 1);
  const std::vector<Tab5> one{Tab5{0, 1, 0, 0, 0}};
  CHECK(shift_ell_t1k(Weight{2, 0}, 1, one) == 1);
  CHECK(shift_ell_t1k(Weight{1, 0}, 1, one) == 0);
}

TEST_CASE("injections are well targeted") {
  CHECK(inject_t1k({}, 1, 0).empty());
  const auto same = inject_t1k({Tab5{1, 1, 0, 0, 0}}, 2, 2);
  CHECK(same == std::vector<Tab5>{Tab5{3, 1, 0, 0, 0}});

  RootSystem a2(LieType{'A', 2});
  const auto nf = cover_normal_form(a2, parse_composition("2,0;0,0"), parse_composition("1,0;1,0"));
  for (const auto& [nu, depth] : dominant_weights_below(a2, Weight{2, 0})) {
    const auto r = check_injection(nf, nu);
    CHECK(r.ok());
  }

  for (const auto& lambda : weights_in_box(2, 3)) {
    const auto p = build_poset(a2, lambda, 2);
    for (const auto& [lo, hi] : p.cover_edges) {
      const auto f = cover_normal_form(a2, p.nodes[lo].canonical, p.nodes[hi].canonical);
      for (const auto& [nu, depth] : dominant_weights_below(a2, lambda)) {
        const auto r = check_injection(f, nu);
        CAPTURE(p.nodes[lo].canonical.str());
        CAPTURE(nu);
        CHECK(r.ok());
      }
    }
  }
}

TEST_CASE("shift bounds hold on every cover up to coordinate 4") {
  RootSystem a2(LieType{'A', 2});
  std::size_t t1k = 0, t2k = 0;
  for (const auto& lambda : weights_in_box(2, 4)) {
    const auto p = build_poset(a2, lambda, 2);
    for (const auto& [lo, hi] : p.cover_edges) {
      const auto f = cover_normal_form(a2, p.nodes[lo].canonical, p.nodes[hi].canonical);
      const Weight& l1 = f.lower.parts[0];
      const Weight& l2 = f.lower.parts[1];
      for (const auto& [nu, depth] : dominant_weights_below(a2, lambda)) {
        const auto domain = lr_tableaux(l2, l1, nu);
        if (f.w == Reflection::S1) {
          ++t2k;
          const auto ell = shift_ell_t2k(l1, f.a, domain);
          for (const auto& s : domain) {
            CHECK(s.s11 >= s.s22 + ell);
            CHECK(s.s13 >= f.a - ell);
          }
        } else {
          ++t1k;
          const auto ell = shift_ell_t1k(l1, f.a, domain);
          CHECK(ell >= 0);
          CHECK(ell <= f.a);
          for (const auto& s : domain) {
            CHECK(f.a - ell <= s.s12);
            CHECK(s.s12 <= l1[0] - ell);
            CHECK(s.s13 <= l1[1] - (f.a - ell));
            CHECK(s.s23 >= f.a - ell);
          }
        }
      }
    }
  }
  CHECK(t1k > 0);
  CHECK(t2k > 0);
}

TEST_CASE("the s1 shift keeps the second row inequality") {
  // Here ell = 1 would satisfy both shift bounds but break s11 + s12 >= s22 + s23.
  RootSystem a2(LieType{'A', 2});
  const auto nf = cover_normal_form(a2, parse_composition("1,1;0,3"), parse_composition("1,2;0,2"));
  REQUIRE(nf.w == Reflection::S1);
  const auto domain = lr_tableaux(nf.lower.parts[1], nf.lower.parts[0], Weight{1, 1});
  REQUIRE(domain.size() == 1);
  CHECK(shift_ell_t2k(nf.lower.parts[0], nf.a, domain) == 0);
  CHECK(inject_t2k(domain, nf.a, 0) == lr_tableaux(nf.upper.parts[1], nf.upper.parts[0], Weight{1, 1}));
  CHECK(check_injection(nf, Weight{1, 1}).ok());
}
