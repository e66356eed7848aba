#include "toric/error.hpp"

namespace toric {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::RayOutsideSupport: return "RayOutsideSupport";
    case ErrorKind::IterationLimitExceeded: return "IterationLimitExceeded";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::ComplementNotConnected: return "ComplementNotConnected";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::IncompatibleFans: return "IncompatibleFans";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {
std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& line : lines) {
    if (!out.empty()) out += "; ";
    out += line;
  }
  return out;
}
}  // namespace

InvalidFanError::InvalidFanError(std::vector<std::string> diagnostics)
    : Error(ErrorKind::InvalidFan, join_lines(diagnostics)), diagnostics_(std::move(diagnostics)) {}

}  // namespace toric
