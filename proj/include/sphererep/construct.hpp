#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "sphererep/rep.hpp"
#include "sphererep/symplectic.hpp"

namespace sphererep {

enum class Orientation { Clockwise, Anticlockwise };

// Boundary rotation angles of a triangle-group pants. The triangle behind it
// has interior angles t_i/2 (Clockwise, sum < pi) or pi - t_i/2 (Anticlockwise,
// sum < pi means t_1 + t_2 + t_3 > 4pi).
struct AngleTriple {
    double t1 = 0.0, t2 = 0.0, t3 = 0.0;
    Orientation orientation = Orientation::Anticlockwise;
};

// Vertices of the triangle realizing an AngleTriple, anchored with p1 = i and
// p2 up the imaginary axis. Exposed so tests can rebuild the pants from raw
// reflections and compare.
std::array<std::complex<double>, 3> triangle_vertices(const AngleTriple& angles);

// Pants representation (n = 3) whose generator j rotates by t_j about vertex
// p_j; the product relation holds by construction.
SphereRep triangle_pants(const AngleTriple& angles);

// Action-angle coordinates on the super-maximal component: peripheral angles
// alpha (size n), pants-curve targets x (size n-3, interior of the Delzant
// polytope), twists t (size n-3, each in [0, pi)).
struct ActionAngleCoords {
    std::vector<double> alpha;
    std::vector<double> x;
    std::vector<double> twist;
};

// Glues n-2 anticlockwise pants along matching elliptic boundary curves and
// applies the twist flows. The result has theta vector alpha, pants-curve
// moment vector x, and Euler class n-1.
SphereRep necklace(const ActionAngleCoords& coords, const Tolerances& tol = {});

// Uniform draw from the component: x by rejection from the open polytope,
// twists uniform in [0, pi). Deterministic in the seed.
SphereRep sample_component(const std::vector<double>& alpha, std::uint64_t seed,
                           const Tolerances& tol = {});

}  // namespace sphererep
