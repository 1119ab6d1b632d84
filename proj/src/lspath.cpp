#include "tensorposet/lspath.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "tensorposet/error.hpp"

namespace tensorposet {

OrbitPoset::OrbitPoset(const RootSystem& rs, const Weight& lambda, std::size_t limit) : rs_(&rs), lambda_(lambda) {
  rs.check_rank(lambda);
  if (!lambda.is_dominant()) throw PreconditionError("orbit shape " + lambda.str() + " is not dominant");
  elements_ = rs.weyl_orbit(lambda, limit);
  const std::size_t n = elements_.size();
  steps_.resize(n);
  std::vector<std::size_t> indegree(n, 0);
  const auto& roots = rs.positive_roots();
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto& b : roots) {
      const std::int64_t v = rs.eval(elements_[u], b);
      if (v >= 0) continue;
      const std::size_t to = index(rs.reflect(elements_[u], b));
      steps_[u].push_back({to, b.index, v});
      ++indegree[to];
    }
  }
  std::deque<std::size_t> ready;
  for (std::size_t u = 0; u < n; ++u)
    if (indegree[u] == 0) ready.push_back(u);
  while (!ready.empty()) {
    const std::size_t u = ready.front();
    ready.pop_front();
    topo_.push_back(u);
    for (const auto& s : steps_[u])
      if (--indegree[s.to] == 0) ready.push_back(s.to);
  }
  if (topo_.size() != n) throw StructuralError("orbit order has a cycle");
  dist_rows_.resize(n);
}

std::optional<std::size_t> OrbitPoset::find(const Weight& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t OrbitPoset::index(const Weight& w) const {
  auto i = find(w);
  if (!i) throw PreconditionError(w.str() + " is not in the orbit of " + lambda_.str());
  return *i;
}

const std::vector<std::int8_t>& OrbitPoset::row(std::size_t mu) const {
  auto& r = dist_rows_.at(mu);
  if (!r.empty()) return r;
  r.assign(elements_.size(), -1);
  r[mu] = 0;
  bool started = false;
  for (std::size_t u : topo_) {
    if (u == mu) started = true;
    if (!started || r[u] < 0) continue;
    for (const auto& s : steps_[u]) r[s.to] = std::max<std::int8_t>(r[s.to], static_cast<std::int8_t>(r[u] + 1));
  }
  return r;
}

int OrbitPoset::dist(std::size_t mu, std::size_t nu) const { return row(mu).at(nu); }

bool OrbitPoset::a_chain_exists(std::size_t mu, std::size_t nu, const Rational& a) const {
  if (!greater(mu, nu)) throw PreconditionError("a-chain needs mu > nu");
  if (a <= 0 || a >= 1) throw PreconditionError("a-chain needs 0 < a < 1");
  std::vector<char> dead(elements_.size(), 0);
  auto search = [&](auto&& self, std::size_t cur) -> bool {
    if (cur == nu) return true;
    if (dead[cur]) return false;
    for (const auto& s : steps_[cur]) {
      if (dist(cur, s.to) != 1 || dist(s.to, nu) < 0) continue;
      const Rational x = a * s.value;
      if (x.denominator() != 1) continue;
      if (self(self, s.to)) return true;
    }
    dead[cur] = 1;
    return false;
  };
  return search(search, mu);
}

std::string LSPath::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t p = 0; p < nus.size(); ++p) os << (p ? "," : "") << nus[p];
  os << ';';
  for (std::size_t p = 0; p < breaks.size(); ++p) os << (p ? "," : "") << breaks[p];
  os << ')';
  return os.str();
}

bool operator<(const LSPath& x, const LSPath& y) {
  if (x.nus != y.nus) return x.nus < y.nus;
  return std::lexicographical_compare(x.breaks.begin(), x.breaks.end(), y.breaks.begin(), y.breaks.end());
}

bool is_ls_path(const OrbitPoset& orbit, const LSPath& path) {
  const std::size_t l = path.nus.size();
  if (l == 0 || path.breaks.size() != l + 1) return false;
  if (path.breaks.front() != Rational(0) || path.breaks.back() != Rational(1)) return false;
  for (std::size_t p = 1; p <= l; ++p)
    if (!(path.breaks[p - 1] < path.breaks[p])) return false;
  std::vector<std::size_t> idx;
  for (const auto& nu : path.nus) {
    auto i = orbit.find(nu);
    if (!i) return false;
    idx.push_back(*i);
  }
  for (std::size_t p = 0; p + 1 < l; ++p) {
    if (!orbit.greater(idx[p], idx[p + 1])) return false;
    if (!orbit.a_chain_exists(idx[p], idx[p + 1], path.breaks[p + 1])) return false;
  }
  return true;
}

namespace {

// Single nonzero coordinate at a minuscule node.
std::optional<std::int64_t> minuscule_multiple(const RootSystem& rs, const Weight& lambda) {
  std::optional<std::size_t> node;
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    if (lambda[i] == 0) continue;
    if (node) return std::nullopt;
    node = i;
  }
  if (!node || !rs.is_minuscule(*node)) return std::nullopt;
  return lambda[*node];
}

std::vector<Rational> candidate_breaks(const OrbitPoset& orbit) {
  const auto& rs = orbit.root_system();
  std::set<std::int64_t> denominators;
  if (auto n = minuscule_multiple(rs, orbit.shape())) {
    denominators.insert(*n);
  } else {
    if (rs.rank() > 2)
      throw UnsupportedError("LS paths of non-minuscule shape " + orbit.shape().str() + " are only supported in rank <= 2");
    for (std::size_t u = 0; u < orbit.size(); ++u)
      for (const auto& s : orbit.steps(u)) denominators.insert(-s.value);
  }
  std::set<Rational> out;
  for (auto m : denominators)
    for (std::int64_t t = 1; t < m; ++t) out.insert(Rational(t, m));
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<LSPath> enumerate_ls_paths(const OrbitPoset& orbit, std::size_t path_limit) {
  std::vector<LSPath> out;
  if (orbit.shape().is_zero()) {
    out.push_back({{orbit.shape()}, {Rational(0), Rational(1)}});
    return out;
  }
  const auto breaks = candidate_breaks(orbit);
  LSPath cur;
  std::vector<std::size_t> idx;
  auto extend = [&](auto&& self) -> void {
    const std::size_t last = idx.back();
    cur.breaks.push_back(Rational(1));
    out.push_back(cur);
    if (out.size() > path_limit)
      throw SizeGuardError("more than " + std::to_string(path_limit) + " LS paths of shape " + orbit.shape().str(),
                           std::to_string(out.size()) + "+");
    cur.breaks.pop_back();
    for (const auto& a : breaks) {
      if (!(cur.breaks.back() < a)) continue;
      for (std::size_t nxt = 0; nxt < orbit.size(); ++nxt) {
        if (!orbit.greater(last, nxt) || !orbit.a_chain_exists(last, nxt, a)) continue;
        cur.nus.push_back(orbit.elements()[nxt]);
        cur.breaks.push_back(a);
        idx.push_back(nxt);
        self(self);
        idx.pop_back();
        cur.breaks.pop_back();
        cur.nus.pop_back();
      }
    }
  };
  for (std::size_t start = 0; start < orbit.size(); ++start) {
    cur.nus = {orbit.elements()[start]};
    cur.breaks = {Rational(0)};
    idx = {start};
    extend(extend);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LSPath> enumerate_ls_paths(const RootSystem& rs, const Weight& lambda, std::size_t path_limit) {
  OrbitPoset orbit(rs, lambda);
  return enumerate_ls_paths(orbit, path_limit);
}

std::vector<Rational> path_eval(const LSPath& path, const Rational& t) {
  if (t < 0 || t > 1) throw PreconditionError("path parameter outside [0,1]");
  if (path.nus.empty()) throw PreconditionError("empty path");
  const std::size_t rank = path.nus.front().rank();
  std::vector<Rational> out(rank, Rational(0));
  for (std::size_t q = 1; q <= path.nus.size(); ++q) {
    const Rational lo = path.breaks[q - 1];
    if (t <= lo) break;
    const Rational len = std::min(t, path.breaks[q]) - lo;
    for (std::size_t i = 0; i < rank; ++i) out[i] += len * path.nus[q - 1][i];
  }
  return out;
}

Weight path_endpoint(const LSPath& path) {
  const auto v = path_eval(path, Rational(1));
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].denominator() != 1) throw StructuralError("path endpoint is not integral: " + path.str());
    w[i] = v[i].numerator();
  }
  return w;
}

bool is_xi_dominant(const LSPath& path, const Weight& xi) {
  for (const auto& a : path.breaks) {
    const auto v = path_eval(path, a);
    if (v.size() != xi.rank()) throw PreconditionError("rank mismatch between path and xi");
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] + xi[i] < 0) return false;
  }
  return true;
}

std::map<Weight, BigCount> dominant_path_counts(const std::vector<LSPath>& paths, const Weight& xi) {
  std::map<Weight, BigCount> out;
  for (const auto& p : paths)
    if (is_xi_dominant(p, xi)) out[xi + path_endpoint(p)] += 1;
  return out;
}

BigCount count_dominant_paths(const std::vector<LSPath>& paths, const Weight& xi, const Weight& mu) {
  BigCount n = 0;
  for (const auto& p : paths)
    if (is_xi_dominant(p, xi) && xi + path_endpoint(p) == mu) n += 1;
  return n;
}

BigCount count_dominant_paths(const RootSystem& rs, const Weight& lambda, const Weight& xi, const Weight& mu) {
  rs.check_rank(xi);
  rs.check_rank(mu);
  if (!xi.is_dominant() || !mu.is_dominant()) throw PreconditionError("xi and mu must be dominant");
  return count_dominant_paths(enumerate_ls_paths(rs, lambda), xi, mu);
}

LSPath iota_r(const RootSystem& rs, const LSPath& path, std::int64_t r, std::size_t node) {
  if (node >= rs.rank()) throw PreconditionError("node out of range");
  if (!rs.is_minuscule(node)) throw PreconditionError("node " + std::to_string(node + 1) + " is not minuscule");
  if (r < 0) throw PreconditionError("r must be nonnegative");
  const Weight shape = r * rs.fundamental(node);
  const Weight next_shape = (r + 1) * rs.fundamental(node);
  if (path.nus.empty() || path.breaks.size() != path.nus.size() + 1)
    throw PreconditionError("malformed path " + path.str());
  for (const auto& nu : path.nus)
    if (rs.dominant_representative(nu).first != shape)
      throw PreconditionError("path " + path.str() + " does not have shape " + shape.str());

  LSPath out;
  const bool merge = path.nus.back() == shape;
  const std::size_t keep = merge ? path.nus.size() - 1 : path.nus.size();
  for (std::size_t p = 0; p < keep; ++p) {
    Weight nu = path.nus[p];
    for (std::size_t i = 0; i < nu.rank(); ++i) nu[i] = nu[i] / r * (r + 1);
    out.nus.push_back(std::move(nu));
  }
  out.nus.push_back(next_shape);
  for (std::size_t p = 0; p <= keep; ++p) out.breaks.push_back(path.breaks[p] * Rational(r, r + 1));
  out.breaks.push_back(Rational(1));
  return out;
}

bool PropMinReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const PropMinEntry& e) {
    return e.images_valid && e.injective && e.source <= e.target;
  });
}

PropMinReport verify_prop_min(const RootSystem& rs, std::int64_t r, std::int64_t s, std::size_t node) {
  if (r < 0 || s < r + 1) throw PreconditionError("need 0 <= r and s >= r + 1");
  if (node >= rs.rank() || !rs.is_minuscule(node)) throw PreconditionError("node must be minuscule");
  const Weight xi_src = s * rs.fundamental(node);
  const Weight xi_dst = (s - 1) * rs.fundamental(node);
  const auto src_paths = enumerate_ls_paths(rs, r * rs.fundamental(node));
  const auto dst_paths = enumerate_ls_paths(rs, (r + 1) * rs.fundamental(node));

  std::map<Weight, std::vector<LSPath>> source, target;
  for (const auto& p : src_paths)
    if (is_xi_dominant(p, xi_src)) source[xi_src + path_endpoint(p)].push_back(p);
  for (const auto& p : dst_paths)
    if (is_xi_dominant(p, xi_dst)) target[xi_dst + path_endpoint(p)].push_back(p);

  std::set<Weight> mus;
  for (const auto& [mu, v] : source) mus.insert(mu);
  for (const auto& [mu, v] : target) mus.insert(mu);

  PropMinReport report{r, s, node, {}};
  for (const auto& mu : mus) {
    PropMinEntry e;
    e.mu = mu;
    const auto& src = source[mu];
    const auto& dst = target[mu];
    e.source = src.size();
    e.target = dst.size();
    std::set<LSPath> images;
    for (const auto& p : src) {
      LSPath img = iota_r(rs, p, r, node);
      if (!std::binary_search(dst.begin(), dst.end(), img)) e.images_valid = false;
      if (!images.insert(std::move(img)).second) e.injective = false;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace tensorposet
