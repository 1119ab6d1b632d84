#pragma once

#include <stdexcept>
#include <string>

namespace tensorposet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold (bad rank, non-dominant
/// input, mismatched compositions, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size bound.
class SizeGuardError : public Error {
 public:
  SizeGuardError(const std::string& what, std::string exact_count)
      : Error(what + " (exact count " + exact_count + ")"), count_(std::move(exact_count)) {}

  const std::string& exact_count() const noexcept { return count_; }

 private:
  std::string count_;
};

/// Requested input lies outside what an algorithm supports (e.g. LS paths of a
/// non-minuscule shape in rank > 2).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed: the computed object contradicts a
/// mathematical statement the construction relies on.
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace tensorposet
