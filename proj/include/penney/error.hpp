#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace penney {

enum class ErrorCode {
  IllegalCharacter,
  BadLength,
  LengthMismatch,
  SameString,
  SingularSystem,
  TieDetected,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every module. The code distinguishes the failure
/// class; what() carries a one-line human readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace penney
