#include "bbs/error.hpp"

namespace bbs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::WellDefinednessViolation: return "WellDefinednessViolation";
    case ErrorCode::NotHighest: return "NotHighest";
    case ErrorCode::InternalSingularityFailure: return "InternalSingularityFailure";
    case ErrorCode::InvalidRigging: return "InvalidRigging";
    case ErrorCode::NegativeVacancy: return "NegativeVacancy";
    case ErrorCode::NoHighestRotation: return "NoHighestRotation";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::RepeatedParts: return "RepeatedParts";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NonBinaryOccupancy: return "NonBinaryOccupancy";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace bbs
