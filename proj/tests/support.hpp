#pragma once

#include <optional>
#include <string>

#include "penney/error.hpp"
#include "penney/pattern.hpp"

namespace test {

inline penney::PatternString P(const std::string& s) { return penney::PatternString::parse(s); }

/// Code of the penney::Error thrown by f, or nullopt if nothing was thrown.
template <class F>
std::optional<penney::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const penney::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace test
