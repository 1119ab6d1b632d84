#include "tensorposet/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "tensorposet/error.hpp"

namespace tensorposet {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

void link(Matrix& a, std::size_t i, std::size_t j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

bool is_positive(const std::vector<std::int64_t>& c) {
  bool nonzero = false;
  for (auto x : c) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

/// Integral symmetrizer L with a[i][j] * L[i] == a[j][i] * L[j].
std::vector<std::int64_t> symmetrizer(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> len(n, Rational(0));
  len[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a[i][j] == 0 || len[j].numerator() != 0) continue;
      len[j] = len[i] * Rational(a[i][j], a[j][i]);
      queue.push_back(j);
    }
  }
  std::int64_t denom = 1;
  for (auto& l : len) {
    if (l.numerator() == 0) throw StructuralError("Dynkin diagram is not connected");
    denom = std::lcm(denom, l.denominator());
  }
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (len[i] * denom).numerator();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j] * out[i] != a[j][i] * out[j]) throw StructuralError("Cartan matrix is not symmetrizable");
  return out;
}

}  // namespace

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw PreconditionError("malformed Lie type '" + std::string(text) + "'");
  LieType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw PreconditionError("malformed Lie type '" + std::string(text) + "'");
  t.validate();
  return t;
}

void LieType::validate() const {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: throw PreconditionError(std::string("unknown Lie family '") + family + "'");
  }
  if (!ok) throw PreconditionError("invalid rank for type " + str());
}

Matrix cartan_matrix(const LieType& type) {
  type.validate();
  const auto n = static_cast<std::size_t>(type.rank);
  Matrix a(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  switch (type.family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      link(a, 0, 2);
      link(a, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

RootSystem::RootSystem(LieType type) : type_(type) {
  cartan_ = cartan_matrix(type_);
  rank_ = cartan_.size();
  lengths_ = symmetrizer(cartan_);

  // Saturate simple reflections starting from the simple roots, staying in the
  // positive cone. Every positive root is reachable this way by height induction.
  std::vector<std::vector<std::int64_t>> found;
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> queue;
  for (std::size_t i = 0; i < rank_; ++i) {
    std::vector<std::int64_t> c(rank_, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    found.push_back(beta);
    for (std::size_t i = 0; i < rank_; ++i) {
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < rank_; ++j) pairing += beta[j] * cartan_[i][j];
      auto next = beta;
      next[i] -= pairing;
      if (is_positive(next) && seen.insert(next).second) queue.push_back(next);
    }
  }

  auto height = [](const std::vector<std::int64_t>& c) { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); };
  std::sort(found.begin(), found.end(), [&](const auto& x, const auto& y) {
    auto hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });

  roots_.reserve(found.size());
  for (auto& c : found) {
    Root r;
    r.index = roots_.size();
    r.coeffs = c;
    r.height = height(c);
    // 2 (beta, beta) = sum_ij c_i c_j a_ij L_i
    std::int64_t len2 = 0;
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) len2 += c[i] * c[j] * cartan_[i][j] * lengths_[i];
    r.coroot.resize(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
      std::int64_t num = 2 * c[i] * lengths_[i];
      if (num % len2 != 0) throw StructuralError("non-integral coroot in " + type_.str());
      r.coroot[i] = num / len2;
    }
    r.weight = Weight(rank_);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j) r.weight[i] += cartan_[i][j] * c[j];
    roots_.push_back(std::move(r));
  }
  simple_index_.resize(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    std::vector<std::int64_t> c(rank_, 0);
    c[i] = 1;
    simple_index_[i] = root_index(c);
  }
  rho_ = Weight(std::vector<Weight::value_type>(rank_, 1));
}

std::uint64_t RootSystem::weyl_group_order() const {
  auto factorial = [](std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const auto n = static_cast<std::uint64_t>(rank_);
  switch (type_.family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << n) * factorial(n);
    case 'D': return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

void RootSystem::check_rank(const Weight& w) const {
  if (w.rank() != rank_)
    throw PreconditionError("weight " + w.str() + " has rank " + std::to_string(w.rank()) + ", expected " +
                            std::to_string(rank_) + " for " + type_.str());
}

std::int64_t RootSystem::eval(const Weight& w, const Root& r) const {
  check_rank(w);
  std::int64_t v = 0;
  for (std::size_t i = 0; i < rank_; ++i) v += r.coroot[i] * w[i];
  return v;
}

Weight RootSystem::reflect_simple(const Weight& w, std::size_t i) const {
  check_rank(w);
  Weight out = w;
  const auto p = w[i];
  for (std::size_t k = 0; k < rank_; ++k) out[k] -= p * cartan_[k][i];
  return out;
}

Weight RootSystem::reflect(const Weight& w, const Root& r) const { return w - eval(w, r) * r.weight; }

Weight RootSystem::apply_word(const Weight& w, const std::vector<std::size_t>& word) const {
  Weight out = w;
  for (auto i : word) out = reflect_simple(out, i);
  return out;
}

Weight RootSystem::apply_word_inverse(const Weight& w, const std::vector<std::size_t>& word) const {
  Weight out = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect_simple(out, *it);
  return out;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w, std::size_t limit) const {
  check_rank(w);
  std::unordered_set<Weight, WeightHash> seen{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& x : frontier) {
      for (std::size_t i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        auto y = reflect_simple(x, i);
        if (seen.insert(y).second) {
          if (seen.size() > limit)
            throw SizeGuardError("Weyl orbit of " + w.str() + " exceeds limit " + std::to_string(limit), "> " + std::to_string(limit));
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Weight, std::vector<std::size_t>> RootSystem::dominant_representative(const Weight& w) const {
  check_rank(w);
  Weight cur = w;
  std::vector<std::size_t> word;
  for (;;) {
    std::size_t i = 0;
    while (i < rank_ && cur[i] >= 0) ++i;
    if (i == rank_) break;
    cur = reflect_simple(cur, i);
    word.push_back(i);
  }
  return {cur, word};
}

Weight RootSystem::minus_w0(const Weight& w) const {
  check_rank(w);
  if (!w.is_dominant()) throw PreconditionError("minus_w0 requires a dominant weight, got " + w.str());
  return dominant_representative(-w).first;
}

bool RootSystem::is_minuscule(std::size_t i) const {
  if (i >= rank_) throw PreconditionError("node index out of range");
  return std::all_of(roots_.begin(), roots_.end(), [i](const Root& r) { return r.coroot[i] == 0 || r.coroot[i] == 1; });
}

std::size_t RootSystem::root_index(const std::vector<std::int64_t>& coeffs) const {
  for (const auto& r : roots_)
    if (r.coeffs == coeffs) return r.index;
  throw PreconditionError("not a positive root");
}

Weight parse_weight(std::string_view text) {
  std::vector<Weight::value_type> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto tok = text.substr(pos, end - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    Weight::value_type v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw PreconditionError("malformed weight '" + std::string(text) + "'");
    coords.push_back(v);
    pos = end + 1;
  }
  return Weight(std::move(coords));
}

}  // namespace tensorposet
