#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compos {

/// Stable error codes. The numeric part is what tests and scripts match on.
enum class ErrorCode {
  SyntaxError = 1,          // E001
  UnresolvedReference = 2,  // E002
  TotalityViolation = 3,    // E003
  ValidationError = 4,      // E004
  IoError = 5,              // E005
  UnmappedSymbol = 6,       // E006
  UnassignedSymbol = 7,     // E007
  NonComposable = 8,        // E008
  IllDefinedMediator = 9,   // E009
  NotEnabled = 10,          // E010
  NonLiteralEffect = 11,    // E011
  ConflictingEffects = 12,  // E012
  AmbiguousInitial = 13,    // E013
  Unsatisfiable = 14,       // E014
  BoundExceeded = 15,       // E015
  NameCollision = 16,       // E016
};

inline std::string error_code_label(ErrorCode code) {
  auto n = static_cast<int>(code);
  std::string digits = std::to_string(n);
  return "E" + std::string(3 - digits.size(), '0') + digits;
}

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::TotalityViolation: return "TotalityViolation";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnmappedSymbol: return "UnmappedSymbol";
    case ErrorCode::UnassignedSymbol: return "UnassignedSymbol";
    case ErrorCode::NonComposable: return "NonComposable";
    case ErrorCode::IllDefinedMediator: return "IllDefinedMediator";
    case ErrorCode::NotEnabled: return "NotEnabled";
    case ErrorCode::NonLiteralEffect: return "NonLiteralEffect";
    case ErrorCode::ConflictingEffects: return "ConflictingEffects";
    case ErrorCode::AmbiguousInitial: return "AmbiguousInitial";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NameCollision: return "NameCollision";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace compos
