#include "dpl/errors.hpp"

namespace dpl {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NormTooSmall: return "NormTooSmall";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::KeyOutOfRange: return "KeyOutOfRange";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::NoModalityPresent: return "NoModalityPresent";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::EmptyBatch: return "EmptyBatch";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::NonFiniteGradient: return "NonFiniteGradient";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::TruncatedFile: return "TruncatedFile";
    case ErrorCode::InconsistentHeader: return "InconsistentHeader";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegenerateLabels: return "DegenerateLabels";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::DataUnavailable: return "DataUnavailable";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConfigInvalid:
    case ErrorCode::InvalidSpec:
    case ErrorCode::InvalidShape:
    case ErrorCode::InvalidThreshold:
    case ErrorCode::InvalidStep:
      return 2;
    case ErrorCode::DataUnavailable:
    case ErrorCode::BadMagic:
    case ErrorCode::VersionMismatch:
    case ErrorCode::TruncatedFile:
    case ErrorCode::InconsistentHeader:
    case ErrorCode::IoFailure:
      return 3;
    default:
      return 4;
  }
}

}  // namespace dpl
