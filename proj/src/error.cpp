#include "clocklattice/error.hpp"

namespace clocklattice {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::LabelArity: return "LabelArity";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonSpherical: return "NonSpherical";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::NugatoryPresent: return "NugatoryPresent";
    case ErrorKind::NotPrimeLike: return "NotPrimeLike";
    case ErrorKind::StarsNotAdjacent: return "StarsNotAdjacent";
    case ErrorKind::PeripheryViolation: return "PeripheryViolation";
    case ErrorKind::NotBipartiteDual: return "NotBipartiteDual";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ClockTheoremViolation: return "ClockTheoremViolation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotExtremal: return "NotExtremal";
    case ErrorKind::OddComponentAssertFailed: return "OddComponentAssertFailed";
    case ErrorKind::EvenDimension: return "EvenDimension";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

}  // namespace clocklattice
