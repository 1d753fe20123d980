#include "lensurf/errors.hpp"

namespace lensurf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonCoprime: return "NonCoprime";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::Inadmissible: return "Inadmissible";
    case ErrorKind::InvalidFraction: return "InvalidFraction";
    case ErrorKind::OddP: return "OddP";
    case ErrorKind::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Consistency: return "Consistency";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

InadmissibleError::InadmissibleError(const std::string& message, int tet,
                                     int face_opposite, int corner)
    : Error(ErrorKind::Inadmissible, message),
      tet_(tet),
      face_opposite_(face_opposite),
      corner_(corner) {}

}  // namespace lensurf
