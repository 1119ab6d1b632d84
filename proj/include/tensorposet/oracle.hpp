#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tensorposet/poset.hpp"
#include "tensorposet/rootsys.hpp"
#include "tensorposet/types.hpp"
#include "tensorposet/weight.hpp"

namespace tensorposet {

/// Weight multiplicities fit comfortably in 64 bits at the scales handled here.
using Multiplicity = std::int64_t;

/// Weight multiplicities of V(highest), stored on dominant weights only.
struct WeightMultiplicityTable {
  Weight highest;
  /// Dominant weights mu <= highest with m(mu) > 0.
  std::map<Weight, Multiplicity> dominant;

  /// m(mu) for an arbitrary weight, via its dominant representative.
  Multiplicity at(const RootSystem& rs, const Weight& mu) const;
  /// Every weight with its multiplicity, sorted by weight.
  std::vector<std::pair<Weight, Multiplicity>> expand(const RootSystem& rs) const;
  /// Sum of all multiplicities (the dimension).
  BigCount total(const RootSystem& rs) const;
};

/// nu -> c^nu, only positive entries.
using DecompositionTable = std::map<Weight, Multiplicity>;

/// Freudenthal's recursion.
WeightMultiplicityTable freudenthal(const RootSystem& rs, const Weight& lambda);

/// Dominant weights mu <= lambda (lambda - mu a nonnegative root combination),
/// each with the simple-root coefficients of lambda - mu.
std::map<Weight, std::vector<std::int64_t>> dominant_weights_below(const RootSystem& rs, const Weight& lambda);

/// Caches characters so repeated tensor computations over one root system stay cheap.
/// Not safe for concurrent use; give each thread its own instance.
class TensorOracle {
 public:
  explicit TensorOracle(const RootSystem& rs) : rs_(rs) {}

  const RootSystem& root_system() const noexcept { return rs_; }
  const WeightMultiplicityTable& character(const Weight& lambda);
  /// Expanded weights of V(lambda).
  const std::vector<std::pair<Weight, Multiplicity>>& weights(const Weight& lambda);

  /// V(lambda) (x) V(mu) by signed reflection of the weights of V(lambda).
  DecompositionTable full_decomposition(const Weight& lambda, const Weight& mu);
  Multiplicity tensor_multiplicity(const Weight& lambda, const Weight& mu, const Weight& nu);
  /// Same decomposition by peeling highest weights off the product character.
  DecompositionTable decomposition_by_subtraction(const Weight& lambda, const Weight& mu);
  /// V(b_1) (x) ... (x) V(b_k), folding from the left.
  DecompositionTable decompose(const Composition& b);

 private:
  const RootSystem& rs_;
  std::map<Weight, WeightMultiplicityTable> chars_;
  std::map<Weight, std::vector<std::pair<Weight, Multiplicity>>> expanded_;
};

BigCount tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu);
DecompositionTable full_decomposition(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// sum_nu c^nu dim V(nu).
BigCount decomposition_dimension(const RootSystem& rs, const DecompositionTable& t);

struct SchurEntry {
  Weight nu;
  Multiplicity lower = 0;
  Multiplicity upper = 0;
  bool violation = false;
};

struct SchurReport {
  Composition lower;
  Composition upper;
  /// Sorted by nu.
  std::vector<SchurEntry> entries;
  std::size_t violations = 0;

  bool ok() const noexcept { return violations == 0; }
};

/// Compares c^nu for V(b_1) (x) V(b_2) against V(m_1) (x) V(m_2). Requires b <= m;
/// inequality failures are recorded, never thrown.
SchurReport schur_compare(TensorOracle& oracle, const Composition& b, const Composition& m);
SchurReport schur_compare(const RootSystem& rs, const Composition& b, const Composition& m);

}  // namespace tensorposet
