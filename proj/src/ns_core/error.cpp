#include "curvelab/error.hpp"

namespace curvelab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::EmptyGenerators: return "EmptyGenerators";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::InvalidGenerator: return "InvalidGenerator";
    case Errc::NotAMember: return "NotAMember";
    case Errc::ParentMismatch: return "ParentMismatch";
    case Errc::NotTwoGenerated: return "NotTwoGenerated";
    case Errc::InternalBoundExceeded: return "InternalBoundExceeded";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace curvelab
