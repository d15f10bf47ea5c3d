#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvelab {

enum class Errc {
  EmptyGenerators,
  GcdNotOne,
  InvalidGenerator,
  NotAMember,
  ParentMismatch,
  NotTwoGenerated,
  InternalBoundExceeded,
  VerificationFailed,
  TooLarge,
  ParseError,
  UnknownSuite,
  UnsupportedFormat,
};

std::string_view to_string(Errc code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace curvelab
