#include "tensorposet/poset.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "tensorposet/error.hpp"

namespace tensorposet {

Weight Composition::total() const {
  if (parts.empty()) throw PreconditionError("empty composition");
  Weight t(parts.front().rank());
  for (const auto& p : parts) t += p;
  return t;
}

std::string Composition::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ';';
    os << parts[i];
  }
  os << ']';
  return os.str();
}

Composition parse_composition(std::string_view text) {
  Composition c;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    c.parts.push_back(parse_weight(text.substr(start, end - start)));
    start = end + 1;
  }
  if (c.parts.empty()) throw PreconditionError("empty composition");
  for (const auto& p : c.parts)
    if (p.rank() != c.parts.front().rank()) throw PreconditionError("composition parts have different ranks");
  return c;
}

Composition sorted_parts(Composition c) {
  std::sort(c.parts.begin(), c.parts.end(), std::greater<>());
  return c;
}

bool RSignature::dominated_by(const RSignature& o) const {
  if (roots_ != o.roots_ || k_ != o.k_) throw PreconditionError("signature shape mismatch");
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] > o.table_[i]) return false;
  return true;
}

std::string RSignature::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(roots_);
  mix(k_);
  for (auto v : table_) mix(static_cast<std::uint64_t>(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

BigCount binomial(std::int64_t n, std::int64_t r) {
  BigCount out = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

void check_composition(const RootSystem& rs, const Composition& c) {
  if (c.parts.empty()) throw PreconditionError("empty composition");
  for (const auto& p : c.parts) {
    rs.check_rank(p);
    if (!p.is_dominant()) throw PreconditionError("composition part " + p.str() + " is not dominant");
  }
}

// All ways of writing n as an ordered sum of k nonnegative integers, lexicographic.
void integer_compositions(std::int64_t n, std::size_t k, std::vector<std::int64_t>& cur,
                          std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() + 1 == k) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::int64_t a = 0; a <= n; ++a) {
    cur.push_back(a);
    integer_compositions(n - a, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BigCount count_compositions(const Weight& lambda, std::size_t k) {
  if (k == 0) throw PreconditionError("k must be positive");
  BigCount total = 1;
  for (auto c : lambda.coords()) {
    if (c < 0) throw PreconditionError("lambda is not dominant");
    total *= binomial(c + static_cast<std::int64_t>(k) - 1, static_cast<std::int64_t>(k) - 1);
  }
  return total;
}

std::vector<Composition> enumerate_compositions(const RootSystem& rs, const Weight& lambda, std::size_t k,
                                                std::uint64_t limit) {
  rs.check_rank(lambda);
  if (!lambda.is_dominant()) throw PreconditionError("lambda " + lambda.str() + " is not dominant");
  BigCount count = count_compositions(lambda, k);
  if (count > limit) {
    throw SizeGuardError("P+(" + lambda.str() + ", " + std::to_string(k) + ") has " + count.str() +
                             " elements, above the limit " + std::to_string(limit),
                         count.str());
  }
  const std::size_t n = rs.rank();
  std::vector<std::vector<std::vector<std::int64_t>>> per_coord(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> cur;
    integer_compositions(lambda[i], k, cur, per_coord[i]);
  }
  std::vector<Composition> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Composition c;
    c.parts.assign(k, Weight(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) c.parts[j][i] = per_coord[i][idx[i]][j];
    out.push_back(std::move(c));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < per_coord[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) {
        pos = n + 1;
        break;
      }
    }
    if (pos == n + 1 || n == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t r_value(const RootSystem& rs, const Composition& b, const Root& alpha, std::size_t ell) {
  if (ell == 0 || ell > b.k()) throw PreconditionError("ell out of range");
  std::vector<std::int64_t> vals;
  vals.reserve(b.k());
  for (const auto& p : b.parts) vals.push_back(rs.eval(p, alpha));
  std::sort(vals.begin(), vals.end());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < ell; ++i) s += vals[i];
  return s;
}

RSignature signature(const RootSystem& rs, const Composition& b) {
  check_composition(rs, b);
  const auto& roots = rs.positive_roots();
  RSignature sig(roots.size(), b.k());
  std::vector<std::int64_t> vals(b.k());
  for (std::size_t r = 0; r < roots.size(); ++r) {
    for (std::size_t j = 0; j < b.k(); ++j) vals[j] = rs.eval(b.parts[j], roots[r]);
    std::sort(vals.begin(), vals.end());
    std::int64_t s = 0;
    for (std::size_t ell = 1; ell <= b.k(); ++ell) {
      s += vals[ell - 1];
      sig.at(r, ell) = s;
    }
  }
  return sig;
}

bool preceq(const RootSystem& rs, const Composition& b, const Composition& m) {
  if (b.k() != m.k()) throw PreconditionError("compositions have different lengths");
  if (b.total() != m.total()) throw PreconditionError("compositions have different totals");
  return signature(rs, b).dominated_by(signature(rs, m));
}

bool equivalent(const RootSystem& rs, const Composition& b, const Composition& m) {
  if (b.k() != m.k()) throw PreconditionError("compositions have different lengths");
  if (b.total() != m.total()) throw PreconditionError("compositions have different totals");
  return signature(rs, b) == signature(rs, m);
}

bool PosetGraph::covers(std::size_t lower, std::size_t upper) const {
  return std::binary_search(cover_edges.begin(), cover_edges.end(), std::make_pair(lower, upper));
}

std::size_t PosetGraph::find(const RootSystem& rs, const Composition& c) const {
  auto sig = signature(rs, c);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].signature == sig) return i;
  throw PreconditionError("composition " + c.str() + " is not in the poset");
}

PosetGraph build_poset(const RootSystem& rs, const Weight& lambda, std::size_t k, std::uint64_t limit) {
  auto comps = enumerate_compositions(rs, lambda, k, limit);
  std::map<RSignature, std::vector<Composition>> classes;
  for (auto& c : comps) {
    auto sig = signature(rs, c);
    classes[std::move(sig)].push_back(std::move(c));
  }

  PosetGraph g;
  g.lambda = lambda;
  g.k = k;
  for (auto& [sig, members] : classes) {
    ClassNode node;
    node.canonical = sorted_parts(members.front());
    for (const auto& m : members) node.canonical = std::min(node.canonical, sorted_parts(m));
    node.members = std::move(members);
    node.signature = sig;
    g.nodes.push_back(std::move(node));
  }
  std::sort(g.nodes.begin(), g.nodes.end(),
            [](const ClassNode& a, const ClassNode& b) { return a.canonical < b.canonical; });

  const std::size_t v = g.nodes.size();
  g.leq.assign(v, std::vector<char>(v, 0));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) g.leq[i][j] = g.nodes[i].signature.dominated_by(g.nodes[j].signature);

  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      if (!g.less(i, j)) continue;
      bool direct = true;
      for (std::size_t m = 0; m < v && direct; ++m)
        if (g.less(i, m) && g.less(m, j)) direct = false;
      if (direct) g.cover_edges.emplace_back(i, j);
    }
  }
  return g;
}

std::vector<std::size_t> maximal_classes(const PosetGraph& p) {
  std::vector<char> has_up(p.nodes.size(), 0);
  for (const auto& [lo, hi] : p.cover_edges) has_up[lo] = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    if (!has_up[i]) out.push_back(i);
  return out;
}

Composition lambda_max_fundamental(std::size_t rank, std::int64_t n, std::size_t node, std::size_t k) {
  if (k == 0) throw PreconditionError("k must be positive");
  if (n < 0) throw PreconditionError("N must be nonnegative");
  if (node >= rank) throw PreconditionError("node out of range");
  const auto kk = static_cast<std::int64_t>(k);
  const std::int64_t q = n / kk;
  const std::int64_t extra = n % kk;
  Composition c;
  for (std::int64_t j = 0; j < kk; ++j) c.parts.push_back((q + (j < extra ? 1 : 0)) * Weight::fundamental(rank, node));
  return c;
}

Composition cover_move(const Composition& b, std::size_t j1, std::size_t j2) {
  const std::size_t k = b.k();
  if (k == 0) throw PreconditionError("empty composition");
  const std::size_t rank = b.parts.front().rank();
  std::size_t node = rank;
  for (const auto& p : b.parts) {
    for (std::size_t i = 0; i < rank; ++i) {
      if (p[i] == 0) continue;
      if (node != rank && node != i) throw PreconditionError("parts are not multiples of one fundamental weight");
      node = i;
    }
  }
  if (node == rank) throw PreconditionError("composition of zero admits no move");
  if (j1 < 1 || j2 <= j1 || j2 > k) throw PreconditionError("need 1 <= j1 < j2 <= k");
  std::vector<std::int64_t> asc(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (b.parts[j][node] < 0) throw PreconditionError("parts must be dominant");
    asc[k - 1 - j] = b.parts[j][node];
  }
  if (!std::is_sorted(asc.begin(), asc.end())) throw PreconditionError("parts must be listed descending");
  auto at = [&](std::size_t j) { return asc[j - 1]; };
  if (at(j2) - at(j1) < 2) throw PreconditionError("need lambda_j2 - lambda_j1 >= 2");
  if (j1 < k && !(at(j1) < at(j1 + 1))) throw PreconditionError("need lambda_j1 < lambda_{j1+1}");
  if (j2 > 1 && !(at(j2 - 1) < at(j2))) throw PreconditionError("need lambda_{j2-1} < lambda_j2");
  asc[j1 - 1] += 1;
  asc[j2 - 1] -= 1;
  Composition out;
  for (std::size_t j = 0; j < k; ++j) out.parts.push_back(asc[k - 1 - j] * Weight::fundamental(rank, node));
  return out;
}

bool k2_criterion(const RootSystem& rs, const Composition& b, const Composition& m) {
  if (b.k() != 2 || m.k() != 2) throw PreconditionError("k2_criterion needs k = 2");
  check_composition(rs, b);
  check_composition(rs, m);
  if (b.total() != m.total()) throw PreconditionError("compositions have different totals");
  for (const auto& a : rs.positive_roots()) {
    const std::int64_t x = rs.eval(b.parts[0] - m.parts[0], a);
    const std::int64_t y = rs.eval(m.parts[0] - b.parts[1], a);
    if (x * y < 0) return false;
  }
  return true;
}

namespace {

void check_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw PreconditionError("partition has a negative entry");
    if (i && p[i] > p[i - 1]) throw PreconditionError("partition is not weakly decreasing");
  }
}

}  // namespace

std::pair<Partition, Partition> row_shuffle_partitions(Partition chi, Partition xi) {
  check_partition(chi);
  check_partition(xi);
  const std::size_t m = std::max(chi.size(), xi.size());
  chi.resize(m, 0);
  xi.resize(m, 0);
  Partition psi = chi;
  psi.insert(psi.end(), xi.begin(), xi.end());
  std::sort(psi.begin(), psi.end(), std::greater<>());
  Partition odd, even;
  for (std::size_t i = 0; i < psi.size(); ++i) (i % 2 == 0 ? odd : even).push_back(psi[i]);
  return {odd, even};
}

Partition conjugate(const Partition& p) {
  check_partition(p);
  Partition out;
  if (p.empty()) return out;
  for (std::int64_t c = 1; c <= p.front(); ++c) {
    std::int64_t len = 0;
    for (auto v : p)
      if (v >= c) ++len;
    out.push_back(len);
  }
  return out;
}

Partition partition_from_weight(const Weight& lambda) {
  if (!lambda.is_dominant()) throw PreconditionError("lambda is not dominant");
  const std::size_t r = lambda.rank() + 1;
  Partition chi(r, 0);
  for (std::size_t j = r - 1; j-- > 0;) chi[j] = chi[j + 1] + lambda[j];
  return chi;
}

Weight weight_from_partition(const Partition& chi, std::size_t rank) {
  check_partition(chi);
  if (chi.size() > rank + 1) throw PreconditionError("partition has too many rows for the rank");
  Partition padded = chi;
  padded.resize(rank + 1, 0);
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = padded[i] - padded[i + 1];
  return w;
}

Composition lambda_max_typeA(const RootSystem& rs, const Weight& lambda) {
  if (rs.lie_type().family != 'A') throw PreconditionError("lambda_max_typeA needs type A");
  rs.check_rank(lambda);
  if (!lambda.is_dominant()) throw PreconditionError("lambda is not dominant");
  Weight l1(rs.rank());
  int sign = 1;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (lambda[i] % 2 == 0) {
      l1[i] = lambda[i] / 2;
    } else {
      l1[i] = (lambda[i] + sign) / 2;
      sign = -sign;
    }
  }
  return Composition{{l1, lambda - l1}};
}

Composition intermediate_element(const RootSystem& rs, const Composition& b, const Composition& m,
                                 const std::vector<std::size_t>& word, std::size_t i0) {
  if (b.k() != 2 || m.k() != 2) throw PreconditionError("intermediate_element needs k = 2");
  if (i0 >= rs.rank()) throw PreconditionError("node out of range");
  for (auto s : word)
    if (s >= rs.rank()) throw PreconditionError("Weyl word letter out of range");
  if (!preceq(rs, b, m) || equivalent(rs, b, m)) throw PreconditionError("need b strictly below m");
  const Weight& l1 = b.parts[0];
  const Weight& l2 = b.parts[1];
  const Weight& m1 = m.parts[0];
  if (!rs.apply_word(l1 - l2, word).is_dominant())
    throw PreconditionError("w(lambda_1 - lambda_2) is not dominant");
  const std::int64_t x = rs.apply_word(l1 - m1, word)[i0];
  const std::int64_t y = rs.apply_word(m1 - l2, word)[i0];
  if (x * y <= 0) throw PreconditionError("support hypothesis fails at node " + std::to_string(i0 + 1));
  const Weight shift = rs.apply_word_inverse(rs.fundamental(i0), word);
  return Composition{{l1 - shift, l2 + shift}};
}

}  // namespace tensorposet
