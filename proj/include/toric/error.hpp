#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

enum class ErrorKind {
  ZeroVector,
  DimensionMismatch,
  NotPointed,
  NotAFace,
  InvalidFan,
  RayOutsideSupport,
  IterationLimitExceeded,
  RankTooSmall,
  ComplementNotConnected,
  ZeroPolynomial,
  IncompatibleFans,
  ParseError,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by fan construction; carries one line per violation.
class InvalidFanError : public Error {
 public:
  explicit InvalidFanError(std::vector<std::string> diagnostics);

  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

}  // namespace toric
