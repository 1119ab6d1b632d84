#include "tensorposet/repdim.hpp"

#include "tensorposet/error.hpp"

namespace tensorposet {

BigCount weyl_dim(const RootSystem& rs, const Weight& lambda) {
  rs.check_rank(lambda);
  if (!lambda.is_dominant()) throw PreconditionError("weyl_dim needs a dominant weight, got " + lambda.str());
  const Weight shifted = lambda + rs.rho();
  BigCount num = 1;
  BigCount den = 1;
  for (const auto& a : rs.positive_roots()) {
    num *= rs.eval(shifted, a);
    den *= rs.eval(rs.rho(), a);
  }
  if (num % den != 0) throw StructuralError("Weyl dimension quotient is not integral");
  return num / den;
}

BigCount dim_product(const RootSystem& rs, const Composition& b) {
  BigCount d = 1;
  for (const auto& p : b.parts) d *= weyl_dim(rs, p);
  return d;
}

std::vector<std::int64_t> sl2_reduction(const RootSystem& rs, const Composition& b, const Root& alpha) {
  std::vector<std::int64_t> out;
  out.reserve(b.k());
  for (const auto& p : b.parts) out.push_back(rs.eval(p + rs.rho(), alpha) - 1);
  return out;
}

DimOrder compare_dims(const RootSystem& rs, const Composition& b, const Composition& m) {
  if (!preceq(rs, b, m)) throw PreconditionError(b.str() + " is not below " + m.str());
  const bool same = equivalent(rs, b, m);
  const BigCount db = dim_product(rs, b);
  const BigCount dm = dim_product(rs, m);
  if (same ? db != dm : !(db < dm))
    throw StructuralError("dimension comparison disagrees with the preorder for " + b.str() + " and " + m.str());
  return same ? DimOrder::Equal : DimOrder::Less;
}

}  // namespace tensorposet
