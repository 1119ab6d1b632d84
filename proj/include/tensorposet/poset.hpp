#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tensorposet/rootsys.hpp"
#include "tensorposet/types.hpp"
#include "tensorposet/weight.hpp"

namespace tensorposet {

inline constexpr std::uint64_t kDefaultCompositionLimit = 10'000'000;

/// An ordered k-tuple of dominant weights (an element of P+(lambda, k)).
struct Composition {
  std::vector<Weight> parts;

  std::size_t k() const noexcept { return parts.size(); }
  Weight total() const;
  std::string str() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Parses "2,0;0,1" (weights separated by ';').
Composition parse_composition(std::string_view text);

/// Same composition with parts sorted descending (lexicographic weight order).
Composition sorted_parts(Composition c);

/// r_{alpha,l} for all positive roots alpha and 1 <= l <= k, stored densely by
/// (root index, l - 1).
class RSignature {
 public:
  RSignature() = default;
  RSignature(std::size_t num_roots, std::size_t k) : roots_(num_roots), k_(k), table_(num_roots * k, 0) {}

  std::size_t num_roots() const noexcept { return roots_; }
  std::size_t k() const noexcept { return k_; }
  /// ell is 1-based.
  std::int64_t at(std::size_t root, std::size_t ell) const { return table_.at(root * k_ + ell - 1); }
  std::int64_t& at(std::size_t root, std::size_t ell) { return table_.at(root * k_ + ell - 1); }
  const std::vector<std::int64_t>& values() const noexcept { return table_; }

  /// Entrywise <=.
  bool dominated_by(const RSignature& o) const;
  /// 64-bit FNV-1a hash of the table, as 16 hex digits.
  std::string digest() const;

  friend auto operator<=>(const RSignature&, const RSignature&) = default;
  friend bool operator==(const RSignature&, const RSignature&) = default;

 private:
  std::size_t roots_ = 0;
  std::size_t k_ = 0;
  std::vector<std::int64_t> table_;
};

/// |P+(lambda, k)| = prod_i C(lambda_i + k - 1, k - 1).
BigCount count_compositions(const Weight& lambda, std::size_t k);

/// All of P+(lambda, k) in lexicographic order. Throws SizeGuardError when the
/// count exceeds `limit`.
std::vector<Composition> enumerate_compositions(const RootSystem& rs, const Weight& lambda, std::size_t k,
                                                std::uint64_t limit = kDefaultCompositionLimit);

/// Minimum over l-subsets of parts of the subset sum evaluated on h_alpha.
std::int64_t r_value(const RootSystem& rs, const Composition& b, const Root& alpha, std::size_t ell);
RSignature signature(const RootSystem& rs, const Composition& b);

/// b <= m in the preorder: r_{alpha,l}(b) <= r_{alpha,l}(m) for all alpha, l.
bool preceq(const RootSystem& rs, const Composition& b, const Composition& m);
/// Equal signatures.
bool equivalent(const RootSystem& rs, const Composition& b, const Composition& m);

struct ClassNode {
  /// Least member (lexicographically) among members with parts sorted descending.
  Composition canonical;
  std::vector<Composition> members;
  RSignature signature;
};

/// The poset P+(lambda, k)/~ with its Hasse diagram.
struct PosetGraph {
  Weight lambda;
  std::size_t k = 0;
  std::vector<ClassNode> nodes;
  /// (lower, upper) pairs of the cover relation, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges;
  /// leq[i][j] != 0 iff node i <= node j.
  std::vector<std::vector<char>> leq;

  bool less(std::size_t i, std::size_t j) const { return i != j && leq[i][j]; }
  bool covers(std::size_t lower, std::size_t upper) const;
  /// Node containing the composition; throws PreconditionError if none.
  std::size_t find(const RootSystem& rs, const Composition& c) const;
};

PosetGraph build_poset(const RootSystem& rs, const Weight& lambda, std::size_t k,
                       std::uint64_t limit = kDefaultCompositionLimit);

/// Indices of nodes without an outgoing cover edge.
std::vector<std::size_t> maximal_classes(const PosetGraph& p);

/// For lambda = N omega_i: the composition with all parts in {q, q+1}, listed
/// descending, e.g. N=7, k=3 -> (3,2,2) omega_i.
Composition lambda_max_fundamental(std::size_t rank, std::int64_t n, std::size_t node, std::size_t k);

/// The move lambda(j2, j1) on a composition of N omega_i whose parts are listed
/// descending. Indices follow the ascending labelling lambda_1 <= ... <= lambda_k,
/// i.e. lambda_j is the j-th smallest part, 1-based.
Composition cover_move(const Composition& b, std::size_t j1, std::size_t j2);

/// k = 2 test: (b1 - m1)(h_alpha) * (m1 - b2)(h_alpha) >= 0 for every positive root.
bool k2_criterion(const RootSystem& rs, const Composition& b, const Composition& m);

/// Weakly decreasing sequence of nonnegative integers.
using Partition = std::vector<std::int64_t>;

/// Row shuffle: interleave the merged rows of chi and xi into odd and even rows.
std::pair<Partition, Partition> row_shuffle_partitions(Partition chi, Partition xi);
/// Conjugate (dual) partition; trailing zeros ignored.
Partition conjugate(const Partition& p);
/// chi(lambda) for type A_{r-1}: chi_j = sum_{p >= j} lambda_p, length r, chi_r = 0.
Partition partition_from_weight(const Weight& lambda);
/// lambda(chi) = sum_i (chi_i - chi_{i+1}) omega_i for a rank-`rank` weight.
Weight weight_from_partition(const Partition& chi, std::size_t rank);

/// The unique maximal element (lambda^1, lambda^2) of P+(lambda, 2) in type A.
Composition lambda_max_typeA(const RootSystem& rs, const Weight& lambda);

/// (b1 - w^{-1} omega_{i0}, b2 + w^{-1} omega_{i0}) for b < m satisfying the
/// support hypothesis at node i0. Throws PreconditionError when a hypothesis fails.
Composition intermediate_element(const RootSystem& rs, const Composition& b, const Composition& m,
                                 const std::vector<std::size_t>& word, std::size_t i0);

}  // namespace tensorposet
