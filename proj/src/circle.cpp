#include "sphererep/circle.hpp"

#include <cmath>
#include <sstream>

namespace sphererep {

namespace {

// Direction angle in [0, pi) of the image of direction 0, the anchor for the
// canonical branch choice.
double anchor_angle(const GroupElement& g) {
    double f0 = std::fmod(std::atan2(g.c, g.a), kPi);
    if (f0 < 0.0) f0 += kPi;
    if (f0 >= kPi) f0 -= kPi;
    return f0;
}

}  // namespace

CirclePoint canonical_eval(const GroupElement& g, CirclePoint x) {
    double f0 = anchor_angle(g);
    double k = std::floor(x / kTwoPi);
    double x0 = x - kTwoPi * k;  // [0, 2pi)
    double phi = 0.5 * x0;
    double wx = g.a * std::cos(phi) + g.b * std::sin(phi);
    double wy = g.c * std::cos(phi) + g.d * std::sin(phi);
    double psi = std::atan2(wy, wx);
    // Unique representative psi + pi*j inside [f0, f0 + pi); selected by
    // rounding toward the interval's center, with a slight bias so that an
    // exact hit on the lower endpoint resolves downward.
    double j = std::nearbyint((f0 + kPi / 2.0 - psi) / kPi - 1e-9);
    double f = psi + kPi * j;
    return 2.0 * f + kTwoPi * k;
}

CirclePoint fixed_direction(const GroupElement& g) {
    double t = g.trace();
    double disc = t * t - 4.0;
    double root = disc > 0.0 ? std::sqrt(disc) : 0.0;
    // Eigenvalue of larger magnitude, for a well-conditioned eigenvector.
    double lambda = (t >= 0.0 ? t + root : t - root) / 2.0;
    double v1a = g.b, v2a = lambda - g.a;
    double v1b = lambda - g.d, v2b = g.c;
    double v1, v2;
    if (v1a * v1a + v2a * v2a >= v1b * v1b + v2b * v2b) {
        v1 = v1a;
        v2 = v2a;
    } else {
        v1 = v1b;
        v2 = v2b;
    }
    if (v1 * v1 + v2 * v2 == 0.0) {
        // Scalar matrix: every direction is fixed.
        return 0.0;
    }
    double phi = std::fmod(std::atan2(v2, v1), kPi);
    if (phi < 0.0) phi += kPi;
    if (phi >= kPi) phi -= kPi;
    return 2.0 * phi;
}

long canonical_winding(const GroupElement& g) {
    CirclePoint xs = fixed_direction(g);
    return std::lround((canonical_eval(g, xs) - xs) / kTwoPi);
}

LiftedElement special_lift(const GroupElement& g, double cls_tol) {
    IsometryClass cls = classify(g, cls_tol);
    switch (cls.tag) {
        case IsometryTag::Identity:
            return {g, 1};
        case IsometryTag::Elliptic:
            return {g, 0};
        case IsometryTag::Hyperbolic:
        case IsometryTag::PositiveParabolic:
            return {g, -canonical_winding(g)};
        case IsometryTag::NegativeParabolic:
            return {g, 1 - canonical_winding(g)};
    }
    return {g, 0};
}

double translation_number(const LiftedElement& f, double cls_tol) {
    IsometryClass cls = classify(f.base, cls_tol);
    double deck = kTwoPi * static_cast<double>(f.offset);
    switch (cls.tag) {
        case IsometryTag::Identity:
            return deck;
        case IsometryTag::Elliptic:
            return cls.angle + deck;
        default:
            // A lift fixing a direction up to w deck moves translates by 2pi*w.
            return deck + kTwoPi * static_cast<double>(canonical_winding(f.base));
    }
}

double translation_number_iterative(const LiftedElement& f, int iters) {
    if (iters <= 0) throw Error(Errc::InvalidInput, "iteration count must be positive");
    CirclePoint x = 0.0;
    for (int i = 0; i < iters; ++i) {
        x = canonical_eval(f.base, x);
    }
    return x / static_cast<double>(iters) + kTwoPi * static_cast<double>(f.offset);
}

long product_power(std::span<const GroupElement> gs, const Tolerances& tol) {
    GroupElement prod = GroupElement::identity();
    for (const GroupElement& g : gs) prod = prod * g;
    if (!approx_identity(prod, tol.relation)) {
        std::ostringstream os;
        os << "generator product is " << psl_dist(prod, GroupElement::identity())
           << " from the identity (tolerance " << tol.relation << ")";
        throw Error(Errc::RelationViolated, os.str());
    }

    std::vector<LiftedElement> lifts;
    lifts.reserve(gs.size());
    for (const GroupElement& g : gs) lifts.push_back(special_lift(g, tol.cls));

    const double samples[3] = {0.0, 1.7, 4.1};
    long power = 0;
    for (int s = 0; s < 3; ++s) {
        CirclePoint y = samples[s];
        for (std::size_t i = gs.size(); i-- > 0;) {
            y = lifted_eval(lifts[i], y);
        }
        double disp = y - samples[s];
        long k = std::lround(disp / kTwoPi);
        if (std::abs(disp - kTwoPi * static_cast<double>(k)) > tol.winding) {
            std::ostringstream os;
            os << "composite lift displacement " << disp << " at x=" << samples[s]
               << " is not a multiple of 2pi within " << tol.winding;
            throw Error(Errc::InconsistentWinding, os.str());
        }
        if (s == 0) {
            power = k;
        } else if (k != power) {
            std::ostringstream os;
            os << "composite lift winding disagrees between sample points (" << power << " vs "
               << k << ")";
            throw Error(Errc::InconsistentWinding, os.str());
        }
    }
    return power;
}

}  // namespace sphererep
