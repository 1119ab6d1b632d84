#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tensorposet/rootsys.hpp"
#include "tensorposet/types.hpp"
#include "tensorposet/weight.hpp"

namespace tensorposet {

inline constexpr std::size_t kDefaultOrbitLimit = 10'000;
inline constexpr std::size_t kDefaultPathLimit = 1'000'000;

/// The order on a Weyl orbit W lambda: mu >= nu when nu is reached from mu by
/// reflections s_beta applied at points xi with xi(h_beta) < 0. The dominant
/// weight is the minimum and w0 lambda the maximum.
///
/// Distance rows are computed lazily and cached, so a const instance is not
/// safe for concurrent use.
class OrbitPoset {
 public:
  struct Step {
    std::size_t to;
    std::size_t root;
    /// xi(h_beta), always negative.
    std::int64_t value;
  };

  OrbitPoset(const RootSystem& rs, const Weight& lambda, std::size_t limit = kDefaultOrbitLimit);

  const RootSystem& root_system() const noexcept { return *rs_; }
  const Weight& shape() const noexcept { return lambda_; }
  /// Orbit elements sorted lexicographically.
  const std::vector<Weight>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t index(const Weight& w) const;
  std::optional<std::size_t> find(const Weight& w) const;
  const std::vector<Step>& steps(std::size_t from) const { return steps_.at(from); }

  /// Longest chain length from mu down to nu, or -1 when mu >= nu fails.
  int dist(std::size_t mu, std::size_t nu) const;
  bool greater(std::size_t mu, std::size_t nu) const { return mu != nu && dist(mu, nu) > 0; }

  /// Whether an a-chain for (mu, nu) exists. Requires mu > nu and 0 < a < 1.
  bool a_chain_exists(std::size_t mu, std::size_t nu, const Rational& a) const;

 private:
  const std::vector<std::int8_t>& row(std::size_t mu) const;

  const RootSystem* rs_;
  Weight lambda_;
  std::vector<Weight> elements_;
  std::vector<std::vector<Step>> steps_;
  std::vector<std::size_t> topo_;
  mutable std::vector<std::vector<std::int8_t>> dist_rows_;
};

/// (nu_1 > ... > nu_l ; 0 = a_0 < a_1 < ... < a_l = 1).
struct LSPath {
  std::vector<Weight> nus;
  std::vector<Rational> breaks;

  std::string str() const;
  friend bool operator==(const LSPath&, const LSPath&) = default;
};

bool operator<(const LSPath& x, const LSPath& y);

/// Structural validity plus existence of every a-chain.
bool is_ls_path(const OrbitPoset& orbit, const LSPath& path);

/// All LS paths of shape lambda, sorted. Shapes N omega_i with omega_i minuscule
/// use breaks t/N; other shapes are supported in rank <= 2 only.
std::vector<LSPath> enumerate_ls_paths(const RootSystem& rs, const Weight& lambda,
                                       std::size_t path_limit = kDefaultPathLimit);
std::vector<LSPath> enumerate_ls_paths(const OrbitPoset& orbit, std::size_t path_limit = kDefaultPathLimit);

/// pi(t) with exact rational coordinates.
std::vector<Rational> path_eval(const LSPath& path, const Rational& t);
/// pi(1) as an integral weight.
Weight path_endpoint(const LSPath& path);
/// (xi + pi(t))(h_i) >= 0 for all i and t, checked at the breakpoints.
bool is_xi_dominant(const LSPath& path, const Weight& xi);

/// #{pi : pi xi-dominant, xi + pi(1) = mu}.
BigCount count_dominant_paths(const std::vector<LSPath>& paths, const Weight& xi, const Weight& mu);
BigCount count_dominant_paths(const RootSystem& rs, const Weight& lambda, const Weight& xi, const Weight& mu);
/// mu -> number of xi-dominant paths ending at mu - xi.
std::map<Weight, BigCount> dominant_path_counts(const std::vector<LSPath>& paths, const Weight& xi);

/// The injection from paths of shape r omega_i to shape (r+1) omega_i.
LSPath iota_r(const RootSystem& rs, const LSPath& path, std::int64_t r, std::size_t node);

struct PropMinEntry {
  Weight mu;
  /// Source and target set sizes.
  std::size_t source = 0;
  std::size_t target = 0;
  bool images_valid = true;
  bool injective = true;
};

struct PropMinReport {
  std::int64_t r = 0;
  std::int64_t s = 0;
  std::size_t node = 0;
  std::vector<PropMinEntry> entries;

  bool ok() const;
};

/// Checks that iota_r maps the s omega_i-dominant paths of shape r omega_i ending
/// at mu injectively into the (s-1) omega_i-dominant paths of shape (r+1) omega_i
/// ending at mu, for every mu reached.
PropMinReport verify_prop_min(const RootSystem& rs, std::int64_t r, std::int64_t s, std::size_t node);

}  // namespace tensorposet
