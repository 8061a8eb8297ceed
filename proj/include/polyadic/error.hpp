#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyadic {

enum class ErrorCode {
  IndexOutOfRange,
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  NotAssociative,
  InvalidAutomorphism,
  SizeCapExceeded,
  ConditionOneFails,
  ConditionTwoFails,
  ArityMismatch,
  NoSolution,
  ReconstructionMismatch,
  HeightViolation,
  LengthViolation,
  UnboundVariable,
  PropertyFailure,
  NotPolyadicHom,
  Inconsistent,
  EmptyGeneratorSet,
  CapExceeded,
  ParseError,
  FileNotFound,
  InvalidInput,
};

const char* to_string(ErrorCode code) noexcept;

// Every library failure is reported through this type. The witness carries
// the offending tuple (element indices, positions) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::int64_t> witness = {});

  ErrorCode code() const noexcept { return code_; }
  std::span<const std::int64_t> witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::int64_t> witness_;
};

// Input errors (bad files, bad syntax) as opposed to mathematical failures.
bool is_input_error(ErrorCode code) noexcept;

}  // namespace polyadic
