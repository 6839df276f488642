#pragma once

#include <stdexcept>
#include <string>

namespace sphererep {

// Machine-readable failure codes. The CLI maps these onto exit codes:
// bad input data -> 1, detected mathematical violation -> 2.
enum class Errc {
    InvalidInput,
    AmbiguousClass,
    InvalidCenter,
    DegenerateGeodesic,
    NotElliptic,
    RelationViolated,
    InconsistentWinding,
    MWViolation,
    InvalidAngles,
    PolytopeViolation,
    GluingFailure,
    EmptyPolytope,
    NonEllipticPantsCurve,
    DegenerateSimplex,
    InvalidRange,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

  private:
    Errc code_;
};

// True for codes that indicate the library caught itself (or its input rep)
// violating a theorem, as opposed to a malformed request.
bool is_violation(Errc code);

}  // namespace sphererep
