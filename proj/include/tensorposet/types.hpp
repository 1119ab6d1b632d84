#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace tensorposet {

/// Exact nonnegative counts (dimensions, multiplicities).
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational numbers, always kept in lowest terms. Compare them only with
/// other Rationals: in C++20 mode, Boost 1.74 recurses forever on `q == 0`.
using Rational = boost::rational<std::int64_t>;

}  // namespace tensorposet
