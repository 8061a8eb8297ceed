#include "polyadic/error.hpp"

namespace polyadic {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::ConditionOneFails: return "ConditionOneFails";
    case ErrorCode::ConditionTwoFails: return "ConditionTwoFails";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::ReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorCode::HeightViolation: return "HeightViolation";
    case ErrorCode::LengthViolation: return "LengthViolation";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::PropertyFailure: return "PropertyFailure";
    case ErrorCode::NotPolyadicHom: return "NotPolyadicHom";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::int64_t> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::FileNotFound:
    case ErrorCode::InvalidInput:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::ArityMismatch:
    case ErrorCode::UnboundVariable:
    case ErrorCode::EmptyGeneratorSet:
    case ErrorCode::SizeCapExceeded:
    case ErrorCode::CapExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace polyadic
