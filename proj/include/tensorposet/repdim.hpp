#pragma once

#include <cstdint>
#include <vector>

#include "tensorposet/poset.hpp"
#include "tensorposet/rootsys.hpp"
#include "tensorposet/types.hpp"
#include "tensorposet/weight.hpp"

namespace tensorposet {

/// dim V(lambda) by the Weyl dimension formula, exact.
BigCount weyl_dim(const RootSystem& rs, const Weight& lambda);

/// Product of weyl_dim over the parts.
BigCount dim_product(const RootSystem& rs, const Composition& b);

/// lambda_s^{(alpha)} = (lambda_s + rho)(h_alpha) - 1 for each part.
std::vector<std::int64_t> sl2_reduction(const RootSystem& rs, const Composition& b, const Root& alpha);

enum class DimOrder { Less, Equal };

/// Compares dim_product for b <= m. Returns Equal exactly when b ~ m.
/// Throws PreconditionError if b is not <= m, and StructuralError if the class
/// verdict disagrees with the integer comparison.
DimOrder compare_dims(const RootSystem& rs, const Composition& b, const Composition& m);

}  // namespace tensorposet
