#pragma once

#include <array>
#include <complex>
#include <limits>
#include <numbers>

#include "sphererep/errors.hpp"

namespace sphererep {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Default tolerances, overridable from the CLI.
struct Tolerances {
    double cls = 1e-9;       // classification band around |trace| = 2
    double relation = 1e-7;  // distance of a product of generators from the identity
    double winding = 1e-6;   // agreement of lifted displacements with a multiple of 2pi
};

// Orientation-preserving isometry of the upper half-plane: a real 2x2 matrix of
// determinant 1 acting by z -> (az + b)/(cz + d), taken modulo global sign.
// Arithmetic keeps the determinant normalized; the sign representative is
// arbitrary except where sign_canonical() is applied for comparison and output.
struct GroupElement {
    double a = 1.0, b = 0.0;
    double c = 0.0, d = 1.0;

    static GroupElement identity() { return {}; }

    // Validates and scales an arbitrary matrix with positive determinant onto
    // determinant exactly 1. Throws InvalidInput otherwise.
    static GroupElement from_entries(double a, double b, double c, double d);

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }

    GroupElement inverse() const { return {d, -b, -c, a}; }

    std::complex<double> apply(std::complex<double> z) const {
        return (a * z + b) / (c * z + d);
    }
};

GroupElement operator*(const GroupElement& g, const GroupElement& h);

// Representative with the first nonzero entry (scanning a, b, c, d, threshold
// 1e-9) positive.
GroupElement sign_canonical(const GroupElement& g);

// Distance in PSL(2,R): Frobenius distance minimized over the sign ambiguity.
double psl_dist(const GroupElement& g, const GroupElement& h);

bool approx_identity(const GroupElement& g, double tol);

enum class IsometryTag {
    Identity,
    Elliptic,
    PositiveParabolic,
    NegativeParabolic,
    Hyperbolic,
};

struct IsometryClass {
    IsometryTag tag = IsometryTag::Identity;
    // Rotation angle in (0, 2pi), set only for Elliptic: the amount by which
    // the element's canonical circle lift translates, i.e. clockwise rotation
    // of the tangent plane at the fixed point by this angle.
    double angle = 0.0;
};

// Classifies by |trace| against 2 with tolerance band cls_tol. Inside the band
// the identity-vs-parabolic call uses min(||M-I||, ||M+I||) (Frobenius); the
// gray zone between cls_tol and 100*cls_tol raises AmbiguousClass.
IsometryClass classify(const GroupElement& g, double cls_tol = 1e-9);

// Jump of the canonical circle lift: 0 for hyperbolic and positive parabolic,
// 2pi for negative parabolic and the identity, the rotation angle for elliptic.
double theta(const GroupElement& g, double cls_tol = 1e-9);

// 2*acosh(|trace|/2) for hyperbolic elements, 0 otherwise.
double translation_length(const GroupElement& g, double cls_tol = 1e-9);

// Elliptic element fixing `center` (Im > 0, else InvalidCenter) and rotating by
// `angle` in (0, 2pi), clockwise on the tangent plane. rotation_any accepts any
// finite angle, reducing mod 2pi and returning the identity at a multiple.
GroupElement rotation(std::complex<double> center, double angle);
GroupElement rotation_any(std::complex<double> center, double angle);

// Fixed point in the open upper half-plane; NotElliptic unless classify says
// Elliptic.
std::complex<double> fixed_point_elliptic(const GroupElement& g, double cls_tol = 1e-9);

// Orientation-reversing isometry z -> M conj(z), stored with det M = -1.
struct AntiElement {
    double a = -1.0, b = 0.0;
    double c = 0.0, d = 1.0;

    std::complex<double> apply(std::complex<double> z) const {
        std::complex<double> w = std::conj(z);
        return (a * w + b) / (c * w + d);
    }
};

// Marker for the boundary point at infinity in reflection().
inline const std::complex<double> kInfinity{std::numeric_limits<double>::infinity(), 0.0};

// Reflection in the geodesic through p and q (points of the closed half-plane,
// kInfinity allowed). DegenerateGeodesic if the two points coincide.
AntiElement reflection(std::complex<double> p, std::complex<double> q);

// Composition acting by z -> s(t(z)); the result is orientation-preserving.
GroupElement compose(const AntiElement& s, const AntiElement& t);

// Conjugation by the reflection z -> -conj(z): [[a,-b],[-c,d]].
GroupElement mirror_conjugate(const GroupElement& g);
AntiElement mirror_reflect(const GroupElement& g);  // the product (z -> -conj(z)) . g

// exp of [[x, y], [z, -x]] in SL(2,R), closed form.
GroupElement exp_sl2(double x, double y, double z);

// Upper-triangular A with A(i) = p; conjugating by it transports i-based
// constructions to p.
GroupElement base_change(std::complex<double> p);

// Any isometry taking `from` to `to` (used to transport fixed points; any
// choice conjugates rotations about `from` to rotations about `to`).
GroupElement transporter(std::complex<double> from, std::complex<double> to);

}  // namespace sphererep
