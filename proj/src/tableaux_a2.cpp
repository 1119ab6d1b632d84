#include "tensorposet/tableaux_a2.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tensorposet/error.hpp"

namespace tensorposet::a2 {

namespace {

void check_a2_dominant(const Weight& w, const char* what) {
  if (w.rank() != 2) throw PreconditionError(std::string(what) + " must be an A2 weight, got " + w.str());
  if (!w.is_dominant()) throw PreconditionError(std::string(what) + " must be dominant, got " + w.str());
}

std::vector<Tab5> transform(const std::vector<Tab5>& ts, std::int64_t d11, std::int64_t d12, std::int64_t d13,
                            std::int64_t d22, std::int64_t d23) {
  std::vector<Tab5> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back({t.s11 + d11, t.s12 + d12, t.s13 + d13, t.s22 + d22, t.s23 + d23});
  return out;
}

}  // namespace

std::string Tab5::str() const {
  std::ostringstream os;
  os << '(' << s11 << ',' << s12 << ',' << s13 << ',' << s22 << ',' << s23 << ')';
  return os.str();
}

bool in_bt(const Tab5& t, const Weight& lambda) {
  if (t.s11 < 0 || t.s12 < 0 || t.s13 < 0 || t.s22 < 0 || t.s23 < 0) return false;
  return t.s11 + t.s12 + t.s13 == lambda[0] + lambda[1] && t.s22 + t.s23 == lambda[1] && t.s11 >= t.s22 &&
         t.s11 + t.s12 >= t.s22 + t.s23;
}

std::vector<Tab5> enumerate_bt(const Weight& lambda) {
  check_a2_dominant(lambda, "tableau shape");
  const std::int64_t row1 = lambda[0] + lambda[1];
  const std::int64_t row2 = lambda[1];
  std::vector<Tab5> out;
  for (std::int64_t s11 = 0; s11 <= row1; ++s11)
    for (std::int64_t s12 = 0; s11 + s12 <= row1; ++s12)
      for (std::int64_t s22 = 0; s22 <= row2; ++s22) {
        Tab5 t{s11, s12, row1 - s11 - s12, s22, row2 - s22};
        if (in_bt(t, lambda)) out.push_back(t);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tab5> filter_weight(const std::vector<Tab5>& ts, const Weight& nu) {
  if (nu.rank() != 2) throw PreconditionError("weight filter needs an A2 weight");
  std::vector<Tab5> out;
  for (const auto& t : ts)
    if (t.weight() == nu) out.push_back(t);
  return out;
}

bool satisfies_lr(const Tab5& t, const Weight& mu, const Weight& nu) {
  return t.s12 <= mu[0] && t.s13 <= mu[1] && t.s23 + t.s13 <= mu[1] + t.s12 &&
         nu[0] + nu[1] == mu[0] + mu[1] + t.s11 - t.s13 - t.s23 && nu[1] == mu[1] + t.s12 + t.s22 - t.s13 - t.s23;
}

std::vector<Tab5> filter_lr(const std::vector<Tab5>& ts, const Weight& mu, const Weight& nu) {
  check_a2_dominant(mu, "mu");
  check_a2_dominant(nu, "nu");
  std::vector<Tab5> out;
  for (const auto& t : ts)
    if (satisfies_lr(t, mu, nu)) out.push_back(t);
  return out;
}

std::vector<Tab5> lr_tableaux(const Weight& lambda, const Weight& mu, const Weight& nu) {
  return filter_lr(enumerate_bt(lambda), mu, nu);
}

std::string to_string(Reflection w) {
  switch (w) {
    case Reflection::Id: return "id";
    case Reflection::S1: return "s1";
    case Reflection::S2: return "s2";
  }
  return "?";
}

Weight apply(Reflection w, const Weight& x) {
  switch (w) {
    case Reflection::Id: return x;
    case Reflection::S1: return Weight{-x[0], x[0] + x[1]};
    case Reflection::S2: return Weight{x[0] + x[1], -x[1]};
  }
  return x;
}

CoverNormalForm cover_normal_form(const RootSystem& rs, const Composition& b, const Composition& m) {
  if (rs.lie_type() != LieType{'A', 2}) throw PreconditionError("cover_normal_form needs type A2");
  if (b.k() != 2 || m.k() != 2) throw PreconditionError("cover_normal_form needs k = 2");
  if (!preceq(rs, b, m) || equivalent(rs, b, m)) throw PreconditionError(b.str() + " is not strictly below " + m.str());

  auto dual = [&rs](const Composition& c) {
    return Composition{{rs.minus_w0(c.parts[0]), rs.minus_w0(c.parts[1])}};
  };
  auto swap = [](const Composition& c) { return Composition{{c.parts[1], c.parts[0]}}; };
  const Weight omega1{1, 0};

  for (bool dualized : {false, true}) {
    const Composition lo0 = dualized ? dual(b) : b;
    const Composition up = dualized ? dual(m) : m;
    for (bool swapped : {false, true}) {
      const Composition lo = swapped ? swap(lo0) : lo0;
      const Weight& l1 = lo.parts[0];
      const Weight& l2 = lo.parts[1];
      for (Reflection w : {Reflection::Id, Reflection::S1, Reflection::S2}) {
        const Weight diff = apply(w, l1 - l2);
        if (!diff.is_dominant() || diff[0] <= 0) continue;
        const Weight step = apply(w, omega1);
        for (std::int64_t a : {std::int64_t{1}, diff[0]}) {
          const Weight m1 = l1 - a * step;
          const Weight m2 = l2 + a * step;
          if (!m1.is_dominant() || !m2.is_dominant()) continue;
          const Composition cand{{m1, m2}};
          if (cand != up && swap(cand) != up) continue;
          return CoverNormalForm{w, a, dualized, swapped, lo, cand};
        }
      }
    }
  }
  throw StructuralError("no cover normal form for " + b.str() + " < " + m.str());
}

std::int64_t shift_ell_t1k(const Weight& l1, std::int64_t a, const std::vector<Tab5>& domain) {
  if (domain.empty()) return a;
  std::int64_t max12 = 0;
  for (const auto& t : domain) max12 = std::max(max12, t.s12);
  return std::clamp<std::int64_t>(l1[0] - max12, 0, a);
}

std::int64_t shift_ell_t1k(const Weight& l1, const Weight& l2, std::int64_t a, const Weight& nu) {
  return shift_ell_t1k(l1, a, lr_tableaux(l2, l1, nu));
}

std::vector<Tab5> inject_t1k(const std::vector<Tab5>& ts, std::int64_t a, std::int64_t ell) {
  const std::int64_t d = a - ell;
  return transform(ts, a, -d, d, d, -d);
}

std::int64_t shift_ell_t2k(const Weight& l1, std::int64_t a, const std::vector<Tab5>& domain) {
  if (domain.empty()) return a;
  for (const auto& t : domain)
    if (t.s13 == l1[1] || t.s13 + t.s23 == l1[1] + t.s12) return 0;
  // Least ell with s13 >= a - ell throughout. Every other target condition
  // bounds ell from above, so the least choice is the one that can work.
  std::int64_t min13 = a;
  for (const auto& t : domain) min13 = std::min(min13, t.s13);
  return a - min13;
}

std::int64_t shift_ell_t2k(const Weight& l1, const Weight& l2, std::int64_t a, const Weight& nu) {
  return shift_ell_t2k(l1, a, lr_tableaux(l2, l1, nu));
}

std::vector<Tab5> inject_t2k(const std::vector<Tab5>& ts, std::int64_t a, std::int64_t ell) {
  const std::int64_t d = a - ell;
  return transform(ts, 0, d, -d, ell, d);
}

InjectionCheck check_injection(const CoverNormalForm& nf, const Weight& nu) {
  const Weight& l1 = nf.lower.parts[0];
  const Weight& l2 = nf.lower.parts[1];
  const Weight& m1 = nf.upper.parts[0];
  const Weight& m2 = nf.upper.parts[1];
  InjectionCheck r;
  r.nu = nu;
  const auto domain = lr_tableaux(l2, l1, nu);
  const auto target = lr_tableaux(m2, m1, nu);
  r.domain = domain.size();
  r.target = target.size();
  std::vector<Tab5> image;
  if (nf.w == Reflection::S1) {
    r.ell = shift_ell_t2k(l1, nf.a, domain);
    image = inject_t2k(domain, nf.a, r.ell);
  } else {
    r.ell = shift_ell_t1k(l1, nf.a, domain);
    image = inject_t1k(domain, nf.a, r.ell);
  }
  std::set<Tab5> seen;
  for (const auto& t : image) {
    if (!std::binary_search(target.begin(), target.end(), t)) r.images_valid = false;
    if (!seen.insert(t).second) r.injective = false;
  }
  return r;
}

}  // namespace tensorposet::a2
