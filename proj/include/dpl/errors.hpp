#pragma once

#include <stdexcept>
#include <string>

namespace dpl {

/// Error categories raised by the library. Each maps to a CLI exit-code
/// category (see exit_code_for).
enum class ErrorCode {
  NormTooSmall,
  InvalidDistribution,
  InvalidShape,
  KeyOutOfRange,
  PatternMismatch,
  NoModalityPresent,
  InvalidThreshold,
  EmptyBatch,
  LabelOutOfRange,
  NonFiniteGradient,
  InvalidStep,
  NotComplete,
  InvalidSpec,
  BadMagic,
  VersionMismatch,
  TruncatedFile,
  InconsistentHeader,
  ShapeMismatch,
  DegenerateLabels,
  ConfigInvalid,
  DataUnavailable,
  IoFailure,
};

const char* to_string(ErrorCode code);

/// CLI exit-code category: 2 = invalid configuration/spec, 3 = data or I/O
/// failure, 4 = numeric/domain error.
int exit_code_for(ErrorCode code);

class DplError : public std::runtime_error {
 public:
  DplError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw DplError(code, message);
}

}  // namespace dpl
