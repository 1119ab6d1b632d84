#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tensorposet {

/// Integral weight written in the basis of fundamental weights: coordinate i is
/// the value of the weight on the simple coroot h_i.
class Weight {
 public:
  using value_type = std::int64_t;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  Weight(std::initializer_list<value_type> c) : coords_(c) {}
  explicit Weight(std::vector<value_type> c) : coords_(std::move(c)) {}

  static Weight fundamental(std::size_t rank, std::size_t i) {
    Weight w(rank);
    w.coords_.at(i) = 1;
    return w;
  }

  std::size_t rank() const noexcept { return coords_.size(); }
  std::span<const value_type> coords() const noexcept { return coords_; }
  const std::vector<value_type>& vec() const noexcept { return coords_; }

  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }

  bool is_dominant() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c >= 0; });
  }
  bool is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c == 0; });
  }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(value_type s);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(value_type s, Weight a) { return a *= s; }
  friend Weight operator*(Weight a, value_type s) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= -1; }

  /// Lexicographic on coordinates.
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  /// "(a,b,c)" form used in diagnostics.
  std::string str() const;

 private:
  std::vector<value_type> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Every weight of the given rank with all coordinates in [0, max_coord], lexicographic.
std::vector<Weight> weights_in_box(std::size_t rank, Weight::value_type max_coord);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto c : w.coords()) h ^= std::hash<Weight::value_type>{}(c) + 0x9e3779b9 + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace tensorposet
