#include "tensorposet/weight.hpp"

#include <ostream>
#include <sstream>

#include "tensorposet/error.hpp"

namespace tensorposet {

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw PreconditionError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw PreconditionError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight& Weight::operator*=(value_type s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '(';
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os << ')';
}

std::vector<Weight> weights_in_box(std::size_t rank, Weight::value_type max_coord) {
  std::vector<Weight> out;
  if (max_coord < 0) return out;
  Weight w(rank);
  for (;;) {
    out.push_back(w);
    std::size_t i = rank;
    while (i > 0 && w[i - 1] == max_coord) w[--i] = 0;
    if (i == 0) return out;
    ++w[i - 1];
  }
}

}  // namespace tensorposet
