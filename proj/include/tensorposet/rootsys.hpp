#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tensorposet/types.hpp"
#include "tensorposet/weight.hpp"

namespace tensorposet {

/// Cartan type of a finite irreducible root system, e.g. A2, B3, G2.
struct LieType {
  char family = 'A';
  int rank = 1;

  /// Parses "A2", "b3", "E8". Throws PreconditionError on malformed input or a rank
  /// outside the classification (A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F4, G2).
  static LieType parse(std::string_view text);
  /// Throws PreconditionError unless the pair is a valid Cartan type.
  void validate() const;
  std::string str() const { return std::string(1, family) + std::to_string(rank); }

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// A positive root together with its coroot.
struct Root {
  std::size_t index = 0;
  /// Coefficients on the simple roots.
  std::vector<std::int64_t> coeffs;
  /// Coefficients d_i with h_alpha = sum d_i h_i.
  std::vector<std::int64_t> coroot;
  /// The root as an element of the weight lattice (fundamental coordinates).
  Weight weight;
  std::int64_t height = 0;
};

/// Finite root system built from its Cartan matrix with Bourbaki numbering.
///
/// Conventions:
///  * cartan()[i][j] = alpha_j(h_i); column j is alpha_j in fundamental coordinates.
///  * root_length2(i) is (alpha_i, alpha_i) in an integral normalization; only ratios
///    matter. Short roots have the smaller value.
///  * node indices are 0-based in the API; node i is Bourbaki's vertex i+1.
///  * a Weyl word {i1, i2, ...} acts by applying s_{i1} first, then s_{i2}, ...
///
/// Instances are immutable once constructed and safe to share between threads.
class RootSystem {
 public:
  explicit RootSystem(LieType type);

  const LieType& lie_type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::vector<std::int64_t>>& cartan() const noexcept { return cartan_; }
  std::int64_t root_length2(std::size_t i) const { return lengths_.at(i); }
  const std::vector<Root>& positive_roots() const noexcept { return roots_; }
  const Root& simple_root(std::size_t i) const { return roots_.at(simple_index_.at(i)); }
  const Weight& rho() const noexcept { return rho_; }
  Weight fundamental(std::size_t i) const { return Weight::fundamental(rank_, i); }
  Weight zero() const { return Weight(rank_); }

  /// |W| from the classification.
  std::uint64_t weyl_group_order() const;

  /// w(h_alpha) = sum_i d_i w_i.
  std::int64_t eval(const Weight& w, const Root& r) const;

  Weight reflect_simple(const Weight& w, std::size_t i) const;
  Weight reflect(const Weight& w, const Root& r) const;
  Weight apply_word(const Weight& w, const std::vector<std::size_t>& word) const;
  /// Applies the inverse of the element represented by word.
  Weight apply_word_inverse(const Weight& w, const std::vector<std::size_t>& word) const;

  /// Full Weyl orbit, sorted lexicographically. Throws SizeGuardError past `limit`.
  std::vector<Weight> weyl_orbit(const Weight& w, std::size_t limit = 2'000'000) const;

  /// The dominant element of the orbit of w and a word moving w onto it.
  std::pair<Weight, std::vector<std::size_t>> dominant_representative(const Weight& w) const;

  /// -w0 on dominant weights; highest weight of the dual module.
  Weight minus_w0(const Weight& w) const;

  /// True iff omega_i(h_alpha) is 0 or 1 for every positive root alpha.
  bool is_minuscule(std::size_t i) const;

  /// Index of the positive root with the given simple-root coefficients.
  std::size_t root_index(const std::vector<std::int64_t>& coeffs) const;

  void check_rank(const Weight& w) const;

 private:
  LieType type_;
  std::size_t rank_ = 0;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::int64_t> lengths_;
  std::vector<Root> roots_;
  std::vector<std::size_t> simple_index_;
  Weight rho_;
};

/// Cartan matrix of the given type in the convention of RootSystem.
std::vector<std::vector<std::int64_t>> cartan_matrix(const LieType& type);

/// Parses "1,0,2" into a weight.
Weight parse_weight(std::string_view text);

}  // namespace tensorposet
