#pragma once

#include <stdexcept>
#include <string>

namespace hi028 {

enum class ErrorCode {
  division_by_zero,
  radicand_overflow,
  negative_radicand,
  parse_error,
  degenerate_line,
  coincident_points,
  zero_ratio,
  point_not_incident,
  nonpositive_radius,
  equal_radii_degenerate,
  nonpositive_input,
  not_separate,
  invalid_render_options,
  invalid_argument,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero:        return "DIVISION_BY_ZERO";
    case ErrorCode::radicand_overflow:       return "RADICAND_OVERFLOW";
    case ErrorCode::negative_radicand:       return "NEGATIVE_RADICAND";
    case ErrorCode::parse_error:             return "PARSE_ERROR";
    case ErrorCode::degenerate_line:         return "DEGENERATE_LINE";
    case ErrorCode::coincident_points:       return "COINCIDENT_POINTS";
    case ErrorCode::zero_ratio:              return "ZERO_RATIO";
    case ErrorCode::point_not_incident:      return "POINT_NOT_INCIDENT";
    case ErrorCode::nonpositive_radius:      return "NONPOSITIVE_RADIUS";
    case ErrorCode::equal_radii_degenerate:  return "EQUAL_RADII_DEGENERATE";
    case ErrorCode::nonpositive_input:       return "NONPOSITIVE_INPUT";
    case ErrorCode::not_separate:            return "NOT_SEPARATE";
    case ErrorCode::invalid_render_options:  return "INVALID_RENDER_OPTIONS";
    case ErrorCode::invalid_argument:        return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

/// All failures surface as this exception; `code()` is stable API,
/// `what()` is the error name plus an optional human detail.
class Error : public std::runtime_error {
 public:
  explicit Error(ErrorCode code, const std::string& detail = "")
      : std::runtime_error(detail.empty() ? std::string(error_name(code))
                                          : std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace hi028
