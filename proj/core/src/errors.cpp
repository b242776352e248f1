#include "blaschke_lab/errors.hpp"

namespace blaschke_lab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PrecisionViolation: return "PrecisionViolation";
    case ErrorCode::EvaluationAtZero: return "EvaluationAtZero";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TruncationTooDeep: return "TruncationTooDeep";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::ZeroCollision: return "ZeroCollision";
    case ErrorCode::SeparationTooSmall: return "SeparationTooSmall";
    case ErrorCode::ContractionViolated: return "ContractionViolated";
    case ErrorCode::MaxIterExceeded: return "MaxIterExceeded";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::RootVerificationFailed: return "RootVerificationFailed";
    case ErrorCode::NearnessExceeded: return "NearnessExceeded";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace blaschke_lab
