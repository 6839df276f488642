#pragma once

#include <span>
#include <vector>

#include "sphererep/psl2.hpp"

namespace sphererep {

// Coordinate on the universal cover of the boundary circle. The chart doubles
// the direction angle of a nonzero vector acted on projectively, so the deck
// transformation is x -> x + 2pi.
using CirclePoint = double;

// A lift is the canonical lift of its base composed with `offset` deck moves.
// The canonical lift is pinned by F(0) in [0, 2pi).
struct LiftedElement {
    GroupElement base;
    long offset = 0;
};

// Canonical lift evaluated at x: continuous, strictly increasing, commutes
// with x -> x + 2pi.
CirclePoint canonical_eval(const GroupElement& g, CirclePoint x);

inline CirclePoint lifted_eval(const LiftedElement& f, CirclePoint x) {
    return canonical_eval(f.base, x) + kTwoPi * static_cast<double>(f.offset);
}

// Direction x* in [0, 2pi) fixed by a non-elliptic element (an eigendirection
// of the matrix), and the deck power by which the canonical lift shifts it.
CirclePoint fixed_direction(const GroupElement& g);
long canonical_winding(const GroupElement& g);

// The unique lift whose translation number equals theta(base): offset 0 for
// elliptic, +1 for the identity, and for the rest the winding of the canonical
// lift at a fixed direction is subtracted (then +1 again for negative
// parabolic, whose theta is 2pi).
LiftedElement special_lift(const GroupElement& g, double cls_tol = 1e-9);

// Translation number lim (F^k(x) - x)/k, in closed form per class.
double translation_number(const LiftedElement& f, double cls_tol = 1e-9);

// Iterative fallback: (F^iters(0) - 0)/iters, within 2pi/iters of the limit.
double translation_number_iterative(const LiftedElement& f, int iters = 10000);

// Composes the special lifts of a relation-satisfying tuple (product of the
// bases must be the identity within tol.relation, else RelationViolated) and
// returns the integer k with the composite equal to the k-th deck power.
// Checked at three sample points; disagreement or a displacement off a
// multiple of 2pi by more than tol.winding raises InconsistentWinding.
long product_power(std::span<const GroupElement> gs, const Tolerances& tol = {});

}  // namespace sphererep
