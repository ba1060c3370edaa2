#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simnitm {

enum class ErrorKind {
  NonFinite,
  StepLimit,
  NonPositiveRadicand,
  Unsupported,
  NoExtremum,
  NoSignChange,
  MaxIterations,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised by every solver path. The kind is what callers dispatch on;
/// a failed solve for a given P* means "no solution on this branch".
class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace simnitm
