#include "toric_dmod/error.hpp"

namespace toric {

const char* to_string(FanErrorKind kind) {
  switch (kind) {
    case FanErrorKind::BadConeIndex: return "BadConeIndex";
    case FanErrorKind::ZeroRay: return "ZeroRay";
    case FanErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case FanErrorKind::DuplicateRay: return "DuplicateRay";
    case FanErrorKind::NonSimplicialCone: return "NonSimplicialCone";
    case FanErrorKind::NonSmoothCone: return "NonSmoothCone";
    case FanErrorKind::RaysDoNotSpan: return "RaysDoNotSpan";
  }
  return "Unknown";
}

}  // namespace toric
