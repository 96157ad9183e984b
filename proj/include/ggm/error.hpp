#pragma once

#include <stdexcept>
#include <string>

namespace ggm {

enum class ErrorCode {
  NotUnimodular,
  NotSymmetric,
  BadDimension,
  BadEuler,
  FiberIdentified,
  DanglingLabel,
  DuplicateLabel,
  MalformedBasisChange,
  DimensionTooSmall,
  SyntaxError,
  SchemaError,
};

constexpr const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BadEuler: return "BadEuler";
    case ErrorCode::FiberIdentified: return "FiberIdentified";
    case ErrorCode::DanglingLabel: return "DanglingLabel";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::MalformedBasisChange: return "MalformedBasisChange";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "UnknownError";
}

/// Domain error with a machine-readable code. Everything user input can
/// trigger throws this; plain std::logic_error/std::invalid_argument is
/// reserved for API misuse and internal bugs.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ggm
