#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmetric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed distance table: ragged, non-finite or asymmetric.
class InvalidSpace : public Error {
 public:
  using Error::Error;
  InvalidSpace(const std::string& what, std::size_t row, std::size_t col)
      : Error(what), row_(row), col_(col), has_witness_(true) {}

  [[nodiscard]] bool has_witness() const noexcept { return has_witness_; }
  [[nodiscard]] std::size_t row() const noexcept { return row_; }
  [[nodiscard]] std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_ = 0;
  std::size_t col_ = 0;
  bool has_witness_ = false;
};

class UnknownPoint : public Error {
 public:
  using Error::Error;
};

/// A numeric argument outside its admissible range (c, k, eps, window, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis required by an operation does not hold.
/// The message always carries the witness that refutes it.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration over the configured size cap, or an exhausted
/// resampling budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Two distinct points both pass a test that admits at most one winner.
/// Raised instead of returning a wrong answer when tolerances collide.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmetric
