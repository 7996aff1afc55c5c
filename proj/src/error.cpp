#include "penney/error.hpp"

namespace penney {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::BadLength:        return "BadLength";
    case ErrorCode::LengthMismatch:   return "LengthMismatch";
    case ErrorCode::SameString:       return "SameString";
    case ErrorCode::SingularSystem:   return "SingularSystem";
    case ErrorCode::TieDetected:      return "TieDetected";
    case ErrorCode::InvalidArgument:  return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace penney
