#include "hiveweb/third.hpp"

namespace hiveweb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidPolygonTriangulation: return "InvalidPolygonTriangulation";
    case ErrorKind::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorKind::NotFlippable: return "NotFlippable";
    case ErrorKind::SelfFoldedUnsupported: return "SelfFoldedUnsupported";
    case ErrorKind::IncompleteHive: return "IncompleteHive";
    case ErrorKind::InvalidHive: return "InvalidHive";
    case ErrorKind::SamplingFailed: return "SamplingFailed";
    case ErrorKind::InvalidWebCoords: return "InvalidWebCoords";
    case ErrorKind::InconsistentSide: return "InconsistentSide";
    case ErrorKind::GluingMismatch: return "GluingMismatch";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::OmegaEmpty: return "OmegaEmpty";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::Malformed: return "Malformed";
  }
  return "Unknown";
}

std::string Third::to_string() const {
  if (is_integer()) return std::to_string(thirds_ / 3);
  return std::to_string(thirds_) + "/3";
}

}  // namespace hiveweb
