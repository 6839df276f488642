#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sphererep/circle.hpp"
#include "sphererep/psl2.hpp"

namespace sphererep {

// Representation of the fundamental group of an n-punctured sphere: generator
// images g_1, ..., g_n with g_1 ... g_n = 1 (one loop around each puncture).
struct SphereRep {
    std::vector<GroupElement> gens;

    int n() const { return static_cast<int>(gens.size()); }
};

// Validates n >= 3 and the defining relation (product within relation_tol of
// the identity in PSL), throwing RelationViolated with the residual otherwise.
SphereRep new_rep(std::vector<GroupElement> gens, double relation_tol = 1e-7);

// Product g_1 ... g_i of the first i generators.
GroupElement prefix_product(const SphereRep& rep, int i);

// The integer k with the product of special lifts equal to the k-th deck power.
long relative_euler_class(const SphereRep& rep, const Tolerances& tol = {});

double big_theta(const SphereRep& rep, double cls_tol = 1e-9);

// 2pi * euler - big_theta, the volume of the representation.
double volume(const SphereRep& rep, const Tolerances& tol = {});

// Conjugation by z -> -conj(z) applied generatorwise.
SphereRep mirror(const SphereRep& rep);

struct EulerReport {
    int n = 0;
    long euler = 0;
    std::vector<double> theta_vector;
    double big_theta = 0.0;
    double volume = 0.0;
    bool super_maximal = false;
    long l = 0;  // punctures with non-hyperbolic image; identity counts twice
    long mw_lower = 0;
    long mw_upper = 0;
};

// Computes the report and checks the two-sided Euler-class bound
//   inf(-|chi| + l, ceil(Theta/2pi)) <= eu <= sup(|chi|, floor(Theta/2pi)),
// |chi| = n - 2. Theta/2pi within 1e-9 of an integer snaps to it before the
// ceiling/floor. A violated bound throws MWViolation: the bound is a theorem,
// so tripping it means the implementation (or the input data) is broken.
EulerReport check_milnor_wood(const SphereRep& rep, const Tolerances& tol = {});

bool is_super_maximal(const SphereRep& rep, const Tolerances& tol = {});

// Splits along the curve enclosing punctures 1..i+1: with B the product of the
// first i+1 generators, returns (g_1, ..., g_{i+1}, B^{-1}) and
// (B, g_{i+2}, ..., g_n). Valid for 1 <= i <= n - 3.
std::pair<SphereRep, SphereRep> restrict_at(const SphereRep& rep, int i,
                                            const Tolerances& tol = {});

// Euler-class defect of the splitting above: 2 if the separating image is the
// identity, 1 if elliptic or parabolic, 0 if hyperbolic.
long gluing_defect(IsometryTag tag);

// Replaces g_j by h g_j h^{-1} for every 1-based index j >= first. The caller
// is responsible for h commuting with the preserved prefix product, which is
// what keeps the defining relation intact.
SphereRep conjugate_tail(const SphereRep& rep, int first, const GroupElement& h,
                         double relation_tol = 1e-7);

// Random relation-satisfying tuple: n - 1 exponentials of Gaussian traceless
// matrices, closed up by the inverse of their product. Deterministic in
// (seed, stream).
SphereRep random_rep(int n, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace sphererep
