#include "sphererep/construct.hpp"

#include <cmath>
#include <sstream>

#include "sphererep/rng.hpp"

namespace sphererep {

namespace {

void validate_triple(const AngleTriple& angles) {
    const double t[3] = {angles.t1, angles.t2, angles.t3};
    for (double ti : t) {
        if (!(ti > 0.0 && ti < kTwoPi)) {
            std::ostringstream os;
            os << "boundary angle must lie in (0, 2pi), got " << ti;
            throw Error(Errc::InvalidAngles, os.str());
        }
    }
    double sum = angles.t1 + angles.t2 + angles.t3;
    if (angles.orientation == Orientation::Clockwise && !(sum < kTwoPi)) {
        std::ostringstream os;
        os << "clockwise triple needs t1+t2+t3 < 2pi, got " << sum;
        throw Error(Errc::InvalidAngles, os.str());
    }
    if (angles.orientation == Orientation::Anticlockwise && !(sum > 2.0 * kTwoPi)) {
        std::ostringstream os;
        os << "anticlockwise triple needs t1+t2+t3 > 4pi, got " << sum;
        throw Error(Errc::InvalidAngles, os.str());
    }
}

}  // namespace

std::array<std::complex<double>, 3> triangle_vertices(const AngleTriple& angles) {
    validate_triple(angles);
    bool anticlockwise = angles.orientation == Orientation::Anticlockwise;
    auto interior = [anticlockwise](double t) {
        return anticlockwise ? kPi - t / 2.0 : t / 2.0;
    };
    double a1 = interior(angles.t1), a2 = interior(angles.t2), a3 = interior(angles.t3);

    // Hyperbolic law of cosines for angles: side opposite the third angle.
    auto side = [](double adj1, double adj2, double opp) {
        double ch = (std::cos(adj1) * std::cos(adj2) + std::cos(opp)) /
                    (std::sin(adj1) * std::sin(adj2));
        return std::acosh(std::max(ch, 1.0));
    };
    double c3 = side(a1, a2, a3);  // p1 to p2
    double c2 = side(a1, a3, a2);  // p1 to p3

    std::complex<double> p1{0.0, 1.0};
    std::complex<double> p2{0.0, std::exp(c3)};
    // Third vertex: leave p1 at angle a1 from the p2 direction, on the side
    // that makes the vertex order p1, p2, p3 run counterclockwise for the
    // anticlockwise orientation. rotation_any(i, -psi) turns tangent vectors
    // counterclockwise by psi.
    double psi = anticlockwise ? a1 : -a1;
    GroupElement turn = rotation_any(p1, -psi);
    std::complex<double> p3 = turn.apply(std::complex<double>{0.0, std::exp(c2)});
    return {p1, p2, p3};
}

SphereRep triangle_pants(const AngleTriple& angles) {
    auto verts = triangle_vertices(angles);
    std::vector<GroupElement> gens{rotation(verts[0], angles.t1), rotation(verts[1], angles.t2),
                                   rotation(verts[2], angles.t3)};
    return new_rep(std::move(gens), 1e-9);
}

SphereRep necklace(const ActionAngleCoords& coords, const Tolerances& tol) {
    std::size_t n = coords.alpha.size();
    std::size_t d = n >= 3 ? n - 3 : 0;
    if (coords.x.size() != d || coords.twist.size() != d) {
        std::ostringstream os;
        os << "need n-3 = " << d << " action and twist values, got " << coords.x.size() << " and "
           << coords.twist.size();
        throw Error(Errc::InvalidInput, os.str());
    }
    for (double tw : coords.twist) {
        if (!(tw >= 0.0 && tw < kPi)) {
            std::ostringstream os;
            os << "twist angles live in [0, pi), got " << tw;
            throw Error(Errc::InvalidInput, os.str());
        }
    }

    DelzantPolytope poly = delzant_polytope(coords.alpha);
    for (const Halfspace& h : poly.halfspaces) {
        if (!(slack(h, coords.x) > 0.0)) {
            std::ostringstream os;
            os << "action coordinates leave the open moment polytope (slack "
               << slack(h, coords.x) << ")";
            throw Error(Errc::PolytopeViolation, os.str());
        }
    }

    if (n == 3) {
        return triangle_pants(
            {coords.alpha[0], coords.alpha[1], coords.alpha[2], Orientation::Anticlockwise});
    }

    // Pants i carries boundary angles (theta of incoming curve, alpha_{i+1},
    // theta of outgoing curve inverse); all anticlockwise.
    SphereRep first = triangle_pants(
        {coords.alpha[0], coords.alpha[1], coords.x[0], Orientation::Anticlockwise});
    std::vector<GroupElement> gens{first.gens[0], first.gens[1]};
    GroupElement b = first.gens[0] * first.gens[1];

    for (std::size_t i = 2; i <= n - 2; ++i) {
        bool last = i == n - 2;
        double incoming = kTwoPi - coords.x[i - 2];
        double middle = coords.alpha[i];  // alpha_{i+1}, 1-based
        double outgoing = last ? coords.alpha[n - 1] : coords.x[i - 1];
        SphereRep pants =
            triangle_pants({incoming, middle, outgoing, Orientation::Anticlockwise});

        // Transporting the first vertex onto the fixed point of b makes the
        // conjugated first generator equal b itself: same fixed point, same
        // rotation angle by construction of the pants data.
        std::complex<double> from = fixed_point_elliptic(pants.gens[0], tol.cls);
        std::complex<double> to = fixed_point_elliptic(b, tol.cls);
        GroupElement c = transporter(from, to);
        GroupElement cinv = c.inverse();

        double match = psl_dist(c * pants.gens[0] * cinv, b);
        if (match > 1e-8) {
            std::ostringstream os;
            os << "glued boundary holonomies disagree by " << match;
            throw Error(Errc::GluingFailure, os.str());
        }

        gens.push_back(c * pants.gens[1] * cinv);
        if (last) {
            gens.push_back(c * pants.gens[2] * cinv);
        } else {
            b = b * gens.back();
        }
    }

    SphereRep rep = new_rep(std::move(gens), tol.relation);
    for (std::size_t i = 0; i < d; ++i) {
        if (coords.twist[i] != 0.0) {
            rep = twist_flow(rep, static_cast<int>(i) + 1, coords.twist[i], tol);
        }
    }
    return rep;
}

SphereRep sample_component(const std::vector<double>& alpha, std::uint64_t seed,
                           const Tolerances& tol) {
    DelzantPolytope poly = delzant_polytope(alpha);  // EmptyPolytope on bad alpha
    std::size_t d = static_cast<std::size_t>(poly.dim);
    ActionAngleCoords coords;
    coords.alpha = alpha;
    coords.x.assign(d, 0.0);
    coords.twist.assign(d, 0.0);
    Rng rng(seed);
    if (d > 0) {
        std::vector<double> lo(d, 0.0), hi(d, 0.0);
        for (std::size_t k = 0; k < d; ++k) {
            lo[k] = hi[k] = poly.vertices[0][k];
            for (const auto& v : poly.vertices) {
                lo[k] = std::min(lo[k], v[k]);
                hi[k] = std::max(hi[k], v[k]);
            }
        }
        const int max_tries = 1000000;
        int tries = 0;
        for (;; ++tries) {
            if (tries >= max_tries) {
                throw Error(Errc::InvalidInput, "rejection sampling failed to hit the polytope");
            }
            for (std::size_t k = 0; k < d; ++k) coords.x[k] = rng.next_uniform(lo[k], hi[k]);
            bool interior = true;
            for (const Halfspace& h : poly.halfspaces) {
                if (!(slack(h, coords.x) > 0.0)) interior = false;
            }
            if (interior) break;
        }
        for (std::size_t k = 0; k < d; ++k) coords.twist[k] = rng.next_uniform(0.0, kPi);
    }
    return necklace(coords, tol);
}

}  // namespace sphererep
