#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tensorposet/poset.hpp"
#include "tensorposet/rootsys.hpp"
#include "tensorposet/weight.hpp"

namespace tensorposet::a2 {

/// Semistandard tableau with entries in {1,2,3} and at most two rows, stored as
/// counts: sij is the number of entries j in row i.
struct Tab5 {
  std::int64_t s11 = 0, s12 = 0, s13 = 0, s22 = 0, s23 = 0;

  /// Weight of the tableau in fundamental coordinates.
  Weight weight() const { return Weight{s11 - s12 - s22, s12 + s22 - s13 - s23}; }
  std::string str() const;

  friend auto operator<=>(const Tab5&, const Tab5&) = default;
  friend bool operator==(const Tab5&, const Tab5&) = default;
};

/// All tableaux of shape lambda, lexicographic. Requires a dominant rank-2 weight.
std::vector<Tab5> enumerate_bt(const Weight& lambda);
/// Whether t is a tableau of shape lambda.
bool in_bt(const Tab5& t, const Weight& lambda);

/// Members of ts with weight nu.
std::vector<Tab5> filter_weight(const std::vector<Tab5>& ts, const Weight& nu);
/// Members of ts satisfying the Littlewood-Richardson constraints for (mu, nu).
/// Applied to all tableaux of shape lambda this yields a set of size
/// c^nu_{mu,lambda}; its members have weight nu - mu.
std::vector<Tab5> filter_lr(const std::vector<Tab5>& ts, const Weight& mu, const Weight& nu);
bool satisfies_lr(const Tab5& t, const Weight& mu, const Weight& nu);
/// filter_lr(enumerate_bt(lambda), mu, nu).
std::vector<Tab5> lr_tableaux(const Weight& lambda, const Weight& mu, const Weight& nu);

enum class Reflection { Id, S1, S2 };
std::string to_string(Reflection w);
/// w(x) for w in {id, s1, s2}.
Weight apply(Reflection w, const Weight& x);

/// A cover pair brought into the shape used by the tableau injections:
/// lambda = (l1, l2) with w(l1 - l2) dominant and w(l1 - l2)(h1) > 0, and
/// mu = (l1 - a w(omega_1), l2 + a w(omega_1)) up to order.
struct CoverNormalForm {
  Reflection w = Reflection::Id;
  std::int64_t a = 0;
  /// -w0 was applied to both compositions.
  bool dualized = false;
  /// The parts of the lower composition were swapped.
  bool swapped = false;
  /// The transformed lower composition (l1, l2) and upper composition (m1, m2)
  /// with m1 = l1 - a w(omega_1).
  Composition lower;
  Composition upper;
};

/// Throws StructuralError when no normal form exists.
CoverNormalForm cover_normal_form(const RootSystem& rs, const Composition& b, const Composition& m);

/// The shift for w in {id, s2}; a when the domain is empty.
std::int64_t shift_ell_t1k(const Weight& l1, std::int64_t a, const std::vector<Tab5>& domain);
std::int64_t shift_ell_t1k(const Weight& l1, const Weight& l2, std::int64_t a, const Weight& nu);
/// Map onto tableaux of shape l2 + a omega_1 with LR weight l1 - a omega_1.
std::vector<Tab5> inject_t1k(const std::vector<Tab5>& ts, std::int64_t a, std::int64_t ell);

/// The shift for w = s1: least 0 <= ell <= a with s13 >= a - ell on the whole
/// domain; a when the domain is empty.
std::int64_t shift_ell_t2k(const Weight& l1, std::int64_t a, const std::vector<Tab5>& domain);
std::int64_t shift_ell_t2k(const Weight& l1, const Weight& l2, std::int64_t a, const Weight& nu);
/// Map onto tableaux of shape l2 + a(omega_2 - omega_1) with LR weight l1 - a(omega_2 - omega_1).
std::vector<Tab5> inject_t2k(const std::vector<Tab5>& ts, std::int64_t a, std::int64_t ell);

struct InjectionCheck {
  Weight nu;
  std::int64_t ell = 0;
  std::size_t domain = 0;
  std::size_t target = 0;
  bool images_valid = true;
  bool injective = true;

  bool ok() const noexcept { return images_valid && injective && domain <= target; }
};

/// Runs normal form, shift and injection for one nu on an already normalized pair.
InjectionCheck check_injection(const CoverNormalForm& nf, const Weight& nu);

}  // namespace tensorposet::a2
