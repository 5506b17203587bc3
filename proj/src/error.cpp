#include "pancake/error.hpp"

namespace pancake {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::SIsIdentity: return "SIsIdentity";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadOffsets: return "BadOffsets";
    case Errc::OverlappingSets: return "OverlappingSets";
    case Errc::DuplicateIndices: return "DuplicateIndices";
    case Errc::UnknownKind: return "UnknownKind";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ArityError: return "ArityError";
    case Errc::RangeError: return "RangeError";
    case Errc::IncompatibleSelection: return "IncompatibleSelection";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::EquivalenceViolation: return "EquivalenceViolation";
  }
  return "Unknown";
}

}  // namespace pancake
