#pragma once

#include <vector>

#include "sphererep/rep.hpp"

namespace sphererep {

// Rotation angles of the inverse pants-curve holonomies b_i^{-1}, i = 1..n-3,
// the action coordinates of the twist torus.
struct MomentVector {
    std::vector<double> beta;
};

// Affine inequality normal . x + offset >= 0 in the beta coordinates.
struct Halfspace {
    std::vector<double> normal;
    double offset = 0.0;
};

// The moment-map image: a simplex with n-2 facets and n-2 vertices in
// dimension n-3, of Euclidean volume lambda^(n-3)/(n-3)!.
struct DelzantPolytope {
    int dim = 0;
    double lambda = 0.0;
    std::vector<Halfspace> halfspaces;
    std::vector<std::vector<double>> vertices;
};

MomentVector moment_map(const SphereRep& rep, const Tolerances& tol = {});

DelzantPolytope delzant_polytope(const std::vector<double>& alpha);

double slack(const Halfspace& h, const std::vector<double>& point);

// True when every halfspace slack is >= -tol (so tol = 0 tests the closed
// polytope, negative interior margins are the caller's choice).
bool polytope_contains(const DelzantPolytope& p, const std::vector<double>& point, double tol);

// Euclidean simplex volume from the stored vertices, |det|/(dim)!.
double polytope_volume(const DelzantPolytope& p);

// (pi * lambda)^(n-3)/(n-3)!; cross-checked internally against
// pi^(n-3) * polytope_volume to 1e-9 relative.
double symplectic_volume(const std::vector<double>& alpha);

// Independent vertex computation: intersect every (dim)-subset of facets and
// keep the feasible points. Used as the oracle against the closed-form corner
// vertices.
std::vector<std::vector<double>> enumerate_vertices(const DelzantPolytope& p);

// Conjugates the generators behind the pants curve b_i (indices >= i+2) by the
// rotation of angle 2t about the fixed point of rho(b_i). Periodic in t with
// period pi.
SphereRep twist_flow(const SphereRep& rep, int i, double t, const Tolerances& tol = {});

// Representation distance modulo conjugation: aligns the first generator's
// fixed point and then the second generator's fixed-point direction, and
// returns the largest generatorwise distance that remains.
double conjugacy_distance(const SphereRep& a, const SphereRep& b, const Tolerances& tol = {});

}  // namespace sphererep
