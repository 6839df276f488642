#include "sphererep/errors.hpp"

namespace sphererep {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::InvalidInput: return "InvalidInput";
        case Errc::AmbiguousClass: return "AmbiguousClass";
        case Errc::InvalidCenter: return "InvalidCenter";
        case Errc::DegenerateGeodesic: return "DegenerateGeodesic";
        case Errc::NotElliptic: return "NotElliptic";
        case Errc::RelationViolated: return "RelationViolated";
        case Errc::InconsistentWinding: return "InconsistentWinding";
        case Errc::MWViolation: return "MWViolation";
        case Errc::InvalidAngles: return "InvalidAngles";
        case Errc::PolytopeViolation: return "PolytopeViolation";
        case Errc::GluingFailure: return "GluingFailure";
        case Errc::EmptyPolytope: return "EmptyPolytope";
        case Errc::NonEllipticPantsCurve: return "NonEllipticPantsCurve";
        case Errc::DegenerateSimplex: return "DegenerateSimplex";
        case Errc::InvalidRange: return "InvalidRange";
    }
    return "Unknown";
}

bool is_violation(Errc code) {
    switch (code) {
        case Errc::MWViolation:
        case Errc::InconsistentWinding:
        case Errc::GluingFailure:
            return true;
        default:
            return false;
    }
}

}  // namespace sphererep
