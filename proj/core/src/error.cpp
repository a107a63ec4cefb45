#include "htube/error.hpp"

namespace htube {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::ModelMismatch: return "ModelMismatch";
    case ErrorKind::SupercriticalViolation: return "SupercriticalViolation";
    case ErrorKind::NonpositiveH: return "NonpositiveH";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::DegenerateProjection: return "DegenerateProjection";
    case ErrorKind::NonToralSister: return "NonToralSister";
    case ErrorKind::StepFailure: return "StepFailure";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::DegenerateTangency: return "DegenerateTangency";
    case ErrorKind::RootBracket: return "RootBracket";
  }
  return "Unknown";
}

bool is_numerical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::StepFailure:
    case ErrorKind::QuadratureFailure:
    case ErrorKind::DegenerateTangency:
    case ErrorKind::RootBracket:
      return true;
    default:
      return false;
  }
}

}  // namespace htube
