#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ununfold {

enum class ErrorCode {
  // mesh-core
  IndexOutOfRange,
  RepeatedVertex,
  NonManifoldEdge,
  InconsistentOrientation,
  DegenerateFace,
  BadEulerCharacteristic,
  NotADisk,
  // constructions
  EmbeddingSolveFailure,
  EmbeddingInvalid,
  BoundaryMismatch,
  InvalidStacking,
  CurvatureSignViolation,
  CrownTooShort,
  InvalidParameter,
  // unfold-engine
  InvalidCutSet,
  NonDevelopablePiece,
  CurvatureSignatureMismatch,
  // predicates
  DegenerateInput,
  PrecisionExhausted,
  // verify
  TooLarge,
  EnumerationMismatch,
  // io
  IoError,
  ParseError,
};

std::string_view toString(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(toString(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ununfold
