#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace catmodel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ill-formed input structure: unresolved ids, bad composition entries,
/// missing composites for composable pairs.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class NotComposableError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError() : Error("singular") {}
};

/// Raised when a product of matrices leaves the generating entry pool.
class ClosureError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search or check refused to run because its size bound
/// exceeds the configured limit.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::uint64_t bound, std::uint64_t limit)
      : Error(what + ": bound " + std::to_string(bound) + " exceeds limit " +
              std::to_string(limit)),
        bound_(bound),
        limit_(limit) {}

  std::uint64_t bound() const noexcept { return bound_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t bound_;
  std::uint64_t limit_;
};

class UnknownPointError : public Error {
 public:
  using Error::Error;
};

/// Evaluator failure in a sampled flow check, carrying the offending input.
class EvaluatorError : public Error {
 public:
  using Error::Error;
};

}  // namespace catmodel
