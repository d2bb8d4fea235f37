#include "gendiff/error.h"

namespace gendiff {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAliasingRisk: return "AliasingRisk";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kMagnitudeLimit: return "MagnitudeLimit";
    case ErrorCode::kNotInRange: return "NotInRange";
    case ErrorCode::kNotDecomposable: return "NotDecomposable";
    case ErrorCode::kNotInSubspace: return "NotInSubspace";
    case ErrorCode::kBadShiftSet: return "BadShiftSet";
    case ErrorCode::kDegenerateFrequency: return "DegenerateFrequency";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kOutOfCell: return "OutOfCell";
    case ErrorCode::kStructuralViolation: return "StructuralViolation";
    case ErrorCode::kSearchExhausted: return "SearchExhausted";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code) {}

}  // namespace gendiff
