#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitconics {

enum class ErrorKind {
  InvalidInput,
  InvalidShape,
  DegenerateTriangle,
  RightTriangle,
  SingularSystem,
  IllConditioned,
  NotAnEllipse,
  NoRealConic,
  DegenerateConic,
  PointAtInfinity,
  UndefinedForShape,
  ClosureFailure,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::InvalidShape: return "invalid_shape";
    case ErrorKind::DegenerateTriangle: return "degenerate_triangle";
    case ErrorKind::RightTriangle: return "right_triangle";
    case ErrorKind::SingularSystem: return "singular_system";
    case ErrorKind::IllConditioned: return "ill_conditioned";
    case ErrorKind::NotAnEllipse: return "not_an_ellipse";
    case ErrorKind::NoRealConic: return "no_real_conic";
    case ErrorKind::DegenerateConic: return "degenerate_conic";
    case ErrorKind::PointAtInfinity: return "point_at_infinity";
    case ErrorKind::UndefinedForShape: return "undefined_for_shape";
    case ErrorKind::ClosureFailure: return "closure_failure";
  }
  return "unknown";
}

/// Every failure raised by the library. The kind is stable and
/// machine-readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind)
  {
  }

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures caused by the caller's parameters rather than by
  /// numerics (maps to CLI exit code 1 instead of 2).
  bool is_usage_error() const noexcept
  {
    return kind_ == ErrorKind::InvalidInput || kind_ == ErrorKind::InvalidShape;
  }

 private:
  ErrorKind kind_;
};

}  // namespace orbitconics
