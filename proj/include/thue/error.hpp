#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thue {

enum class ErrorKind {
  ParameterMismatch,
  NotAUnit,
  PrecisionExhausted,
  DegenerateTwist,
  InsufficientSamples,
  ExactMatch,
  NotReducible,
  RoundingAmbiguous,
  ReducibleForm,
  ChainPreconditionFailed,
  EmptyGrid,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DegenerateTwist: return "DegenerateTwist";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::ExactMatch: return "ExactMatch";
    case ErrorKind::NotReducible: return "NotReducible";
    case ErrorKind::RoundingAmbiguous: return "RoundingAmbiguous";
    case ErrorKind::ReducibleForm: return "ReducibleForm";
    case ErrorKind::ChainPreconditionFailed: return "ChainPreconditionFailed";
    case ErrorKind::EmptyGrid: return "EmptyGrid";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace thue
