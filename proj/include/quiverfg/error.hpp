#pragma once

#include <stdexcept>
#include <string>

namespace qfg {

enum class ErrorCode {
  DimensionMismatch,
  FieldMismatch,
  AlgebraMismatch,
  NotFiniteDimensional,
  NotAdmissible,
  NotIdempotent,
  ZeroQuotient,
  Unsupported,
  FieldTooSmall,
  NotNakayama,
  NoQuiverProvenance,
  ApproximationNotMono,
  NotAComplement,
  CapTooSmall,
  TiltingNotVerified,
  DegreeOverflow,
  InvalidMap,
  ParseError,
  UnknownScenario,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; the code says what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qfg
