#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bbs {

enum class ErrorCode {
  InvalidState,
  WellDefinednessViolation,
  NotHighest,
  InternalSingularityFailure,
  InvalidRigging,
  NegativeVacancy,
  NoHighestRotation,
  NotPositiveDefinite,
  RepeatedParts,
  DimensionMismatch,
  RadiusTooSmall,
  NotFound,
  NonBinaryOccupancy,
  CapExceeded,
  Mismatch,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; `code()` tells
// callers which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bbs
