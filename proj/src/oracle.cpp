#include "tensorposet/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "tensorposet/error.hpp"
#include "tensorposet/repdim.hpp"

namespace tensorposet {

namespace {

Weight dominant_of(const RootSystem& rs, Weight w) {
  for (;;) {
    std::size_t i = 0;
    while (i < w.rank() && w[i] >= 0) ++i;
    if (i == w.rank()) return w;
    w = rs.reflect_simple(w, i);
  }
}

// Moves p into the dominant chamber. Returns false if p lies on a wall of the
// chamber it ends in (the stabilizer then contains a reflection and the signed
// contributions cancel).
bool to_chamber(const RootSystem& rs, Weight& p, int& sign) {
  sign = 1;
  for (;;) {
    std::size_t i = 0;
    while (i < p.rank() && p[i] > 0) ++i;
    if (i == p.rank()) return true;
    if (p[i] == 0) return false;
    p = rs.reflect_simple(p, i);
    sign = -sign;
  }
}

void check_dominant(const RootSystem& rs, const Weight& w) {
  rs.check_rank(w);
  if (!w.is_dominant()) throw PreconditionError("weight " + w.str() + " is not dominant");
}

}  // namespace

Multiplicity WeightMultiplicityTable::at(const RootSystem& rs, const Weight& mu) const {
  auto it = dominant.find(dominant_of(rs, mu));
  return it == dominant.end() ? 0 : it->second;
}

std::vector<std::pair<Weight, Multiplicity>> WeightMultiplicityTable::expand(const RootSystem& rs) const {
  std::vector<std::pair<Weight, Multiplicity>> out;
  for (const auto& [mu, m] : dominant)
    for (auto& w : rs.weyl_orbit(mu)) out.emplace_back(std::move(w), m);
  std::sort(out.begin(), out.end());
  return out;
}

BigCount WeightMultiplicityTable::total(const RootSystem& rs) const {
  BigCount t = 0;
  for (const auto& [mu, m] : dominant) t += BigCount(m) * rs.weyl_orbit(mu).size();
  return t;
}

std::map<Weight, std::vector<std::int64_t>> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  check_dominant(rs, lambda);
  std::map<Weight, std::vector<std::int64_t>> out;
  out.emplace(lambda, std::vector<std::int64_t>(rs.rank(), 0));
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight mu = std::move(queue.front());
    queue.pop_front();
    const auto depth = out.at(mu);
    for (const auto& a : rs.positive_roots()) {
      Weight next = mu - a.weight;
      if (!next.is_dominant() || out.count(next)) continue;
      auto d = depth;
      for (std::size_t i = 0; i < d.size(); ++i) d[i] += a.coeffs[i];
      out.emplace(next, std::move(d));
      queue.push_back(std::move(next));
    }
  }
  return out;
}

WeightMultiplicityTable freudenthal(const RootSystem& rs, const Weight& lambda) {
  const auto below = dominant_weights_below(rs, lambda);
  const std::size_t n = rs.rank();
  std::vector<std::int64_t> len(n);
  for (std::size_t i = 0; i < n; ++i) len[i] = rs.root_length2(i);

  std::vector<std::pair<std::int64_t, Weight>> order;
  for (const auto& [mu, depth] : below)
    order.emplace_back(std::accumulate(depth.begin(), depth.end(), std::int64_t{0}), mu);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  });

  WeightMultiplicityTable table;
  table.highest = lambda;
  // Multiplicities of every dominant weight below lambda, zeros included, so that
  // string walks can tell "not a weight" from "not computed".
  std::map<Weight, Multiplicity> m;
  const Weight two_rho = 2 * rs.rho();
  for (const auto& [height, mu] : order) {
    if (mu == lambda) {
      m[mu] = 1;
      continue;
    }
    const auto& depth = below.at(mu);
    const Weight s = lambda + mu + two_rho;
    std::int64_t denom = 0;
    for (std::size_t j = 0; j < n; ++j) denom += depth[j] * s[j] * len[j];
    std::int64_t sum = 0;
    for (const auto& a : rs.positive_roots()) {
      Weight w = mu + a.weight;
      for (;;) {
        auto it = m.find(dominant_of(rs, w));
        if (it == m.end()) break;
        std::int64_t pairing = 0;
        for (std::size_t k = 0; k < n; ++k) pairing += a.coeffs[k] * len[k] * w[k];
        sum += it->second * pairing;
        w += a.weight;
      }
    }
    if (denom <= 0 || (2 * sum) % denom != 0)
      throw StructuralError("Freudenthal recursion produced a non-integral value at " + mu.str());
    m[mu] = 2 * sum / denom;
  }
  for (const auto& [mu, v] : m)
    if (v > 0) table.dominant.emplace(mu, v);
  return table;
}

const WeightMultiplicityTable& TensorOracle::character(const Weight& lambda) {
  auto it = chars_.find(lambda);
  if (it == chars_.end()) it = chars_.emplace(lambda, freudenthal(rs_, lambda)).first;
  return it->second;
}

const std::vector<std::pair<Weight, Multiplicity>>& TensorOracle::weights(const Weight& lambda) {
  auto it = expanded_.find(lambda);
  if (it == expanded_.end()) it = expanded_.emplace(lambda, character(lambda).expand(rs_)).first;
  return it->second;
}

DecompositionTable TensorOracle::full_decomposition(const Weight& lambda, const Weight& mu) {
  check_dominant(rs_, lambda);
  check_dominant(rs_, mu);
  const Weight shift = mu + rs_.rho();
  std::map<Weight, Multiplicity> acc;
  for (const auto& [delta, mult] : weights(lambda)) {
    Weight p = delta + shift;
    int sign = 1;
    if (!to_chamber(rs_, p, sign)) continue;
    acc[p - rs_.rho()] += sign * mult;
  }
  DecompositionTable out;
  for (const auto& [nu, c] : acc) {
    if (c < 0) throw StructuralError("negative tensor multiplicity at " + nu.str());
    if (c > 0) out.emplace(nu, c);
  }
  return out;
}

Multiplicity TensorOracle::tensor_multiplicity(const Weight& lambda, const Weight& mu, const Weight& nu) {
  check_dominant(rs_, nu);
  const auto t = full_decomposition(lambda, mu);
  auto it = t.find(nu);
  return it == t.end() ? 0 : it->second;
}

DecompositionTable TensorOracle::decomposition_by_subtraction(const Weight& lambda, const Weight& mu) {
  check_dominant(rs_, lambda);
  check_dominant(rs_, mu);
  const Weight top = lambda + mu;
  const auto candidates = dominant_weights_below(rs_, top);
  const auto& mu_char = character(mu);

  std::map<Weight, Multiplicity> remaining;
  for (const auto& [kappa, depth] : candidates) {
    Multiplicity c = 0;
    for (const auto& [delta, m] : weights(lambda)) c += m * mu_char.at(rs_, kappa - delta);
    remaining[kappa] = c;
  }

  std::vector<std::pair<std::int64_t, Weight>> order;
  for (const auto& [kappa, depth] : candidates)
    order.emplace_back(std::accumulate(depth.begin(), depth.end(), std::int64_t{0}), kappa);
  std::sort(order.begin(), order.end());

  DecompositionTable out;
  for (const auto& [height, kappa] : order) {
    const Multiplicity c = remaining.at(kappa);
    if (c < 0) throw StructuralError("product character subtraction went negative at " + kappa.str());
    if (c == 0) continue;
    out.emplace(kappa, c);
    for (const auto& [w, m] : character(kappa).dominant) remaining.at(w) -= c * m;
  }
  return out;
}

DecompositionTable TensorOracle::decompose(const Composition& b) {
  if (b.parts.empty()) throw PreconditionError("empty composition");
  DecompositionTable acc{{b.parts.front(), 1}};
  check_dominant(rs_, b.parts.front());
  for (std::size_t s = 1; s < b.k(); ++s) {
    DecompositionTable next;
    for (const auto& [nu, c] : acc)
      for (const auto& [kappa, d] : full_decomposition(b.parts[s], nu)) next[kappa] += c * d;
    acc = std::move(next);
  }
  return acc;
}

BigCount tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu) {
  TensorOracle o(rs);
  return o.tensor_multiplicity(lambda, mu, nu);
}

DecompositionTable full_decomposition(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  TensorOracle o(rs);
  return o.full_decomposition(lambda, mu);
}

BigCount decomposition_dimension(const RootSystem& rs, const DecompositionTable& t) {
  BigCount d = 0;
  for (const auto& [nu, c] : t) d += BigCount(c) * weyl_dim(rs, nu);
  return d;
}

SchurReport schur_compare(TensorOracle& oracle, const Composition& b, const Composition& m) {
  const auto& rs = oracle.root_system();
  if (b.k() != 2 || m.k() != 2) throw PreconditionError("schur_compare needs k = 2");
  if (!preceq(rs, b, m)) throw PreconditionError(b.str() + " is not below " + m.str());
  const auto lo = oracle.full_decomposition(b.parts[0], b.parts[1]);
  const auto hi = oracle.full_decomposition(m.parts[0], m.parts[1]);
  SchurReport r{b, m, {}, 0};
  std::map<Weight, SchurEntry> merged;
  for (const auto& [nu, c] : lo) merged[nu].lower = c;
  for (const auto& [nu, c] : hi) merged[nu].upper = c;
  for (auto& [nu, e] : merged) {
    e.nu = nu;
    e.violation = e.lower > e.upper;
    if (e.violation) ++r.violations;
    r.entries.push_back(e);
  }
  return r;
}

SchurReport schur_compare(const RootSystem& rs, const Composition& b, const Composition& m) {
  TensorOracle o(rs);
  return schur_compare(o, b, m);
}

}  // namespace tensorposet
