#include "sphererep/psl2.hpp"

#include <cmath>
#include <sstream>

namespace sphererep {

namespace {

bool finite(const GroupElement& g) {
    return std::isfinite(g.a) && std::isfinite(g.b) && std::isfinite(g.c) && std::isfinite(g.d);
}

double frob_dist(const GroupElement& g, const GroupElement& h) {
    double da = g.a - h.a, db = g.b - h.b, dc = g.c - h.c, dd = g.d - h.d;
    return std::sqrt(da * da + db * db + dc * dc + dd * dd);
}

GroupElement negate(const GroupElement& g) { return {-g.a, -g.b, -g.c, -g.d}; }

// Fixed point of a matrix already known to have |trace| < 2. Solves
// c z^2 + (d - a) z - b = 0 picking the root with positive imaginary part;
// both the real part (a-d)/(2c) and the discriminant are sign-invariant.
std::complex<double> elliptic_fixed_point(const GroupElement& g) {
    double t = g.trace();
    double disc = 4.0 - t * t;  // > 0 for elliptic
    double im = std::sqrt(disc) / (2.0 * std::abs(g.c));
    double re = (g.a - g.d) / (2.0 * g.c);
    return {re, im};
}

// Rotation angle of an elliptic element at its fixed point p: the canonical
// circle lift translates by exactly this amount. Derived from the tangent
// action, which is multiplication by 1/(cp + d)^2.
double elliptic_angle(const GroupElement& g, std::complex<double> p) {
    std::complex<double> w = g.c * p + g.d;
    double ang = 2.0 * std::atan2(w.imag(), w.real());
    ang = std::fmod(ang, kTwoPi);
    if (ang <= 0.0) ang += kTwoPi;
    return ang;
}

}  // namespace

GroupElement GroupElement::from_entries(double a, double b, double c, double d) {
    double det = a * d - b * c;
    if (!std::isfinite(det) || det <= 0.0) {
        std::ostringstream os;
        os << "matrix must have positive finite determinant, got " << det;
        throw Error(Errc::InvalidInput, os.str());
    }
    double s = 1.0 / std::sqrt(det);
    return {a * s, b * s, c * s, d * s};
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    GroupElement p{g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                   g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
    // Renormalize so determinant drift cannot accumulate along long words.
    double s = 1.0 / std::sqrt(p.det());
    p.a *= s;
    p.b *= s;
    p.c *= s;
    p.d *= s;
    return p;
}

GroupElement sign_canonical(const GroupElement& g) {
    const double threshold = 1e-9;
    const double entries[4] = {g.a, g.b, g.c, g.d};
    for (double e : entries) {
        if (std::abs(e) > threshold) {
            return e < 0.0 ? negate(g) : g;
        }
    }
    return g;  // numerically zero matrix; cannot happen at determinant 1
}

double psl_dist(const GroupElement& g, const GroupElement& h) {
    return std::min(frob_dist(g, h), frob_dist(g, negate(h)));
}

bool approx_identity(const GroupElement& g, double tol) {
    return psl_dist(g, GroupElement::identity()) <= tol;
}

IsometryClass classify(const GroupElement& g, double cls_tol) {
    if (!finite(g)) throw Error(Errc::InvalidInput, "non-finite matrix entries");
    double t = std::abs(g.trace());
    if (t < 2.0 - cls_tol) {
        std::complex<double> p = elliptic_fixed_point(g);
        return {IsometryTag::Elliptic, elliptic_angle(g, p)};
    }
    if (t > 2.0 + cls_tol) {
        return {IsometryTag::Hyperbolic, 0.0};
    }
    // Trace band: identity vs parabolic, decided on the distance to +-I.
    GroupElement id = GroupElement::identity();
    double d = std::min(frob_dist(g, id), frob_dist(g, negate(id)));
    if (d <= cls_tol) {
        return {IsometryTag::Identity, 0.0};
    }
    if (d < 100.0 * cls_tol) {
        std::ostringstream os;
        os << "element within " << d << " of the identity but outside the identity tolerance "
           << cls_tol << "; widen or narrow --tol-class to resolve";
        throw Error(Errc::AmbiguousClass, os.str());
    }
    // Parabolic. Work with the representative of trace +2; the angular
    // velocity it induces on directions is r cos^2 - 2p sin cos - q sin^2 for
    // N - I = [[p, q], [r, -p]], a semidefinite form. Its sign is carried by r
    // unless r = 0, in which case the motion is governed by -q.
    GroupElement n = g.trace() > 0.0 ? g : negate(g);
    double r = n.c;
    double q = n.b;
    bool positive = r > 0.0 || (r == 0.0 && q < 0.0);
    return {positive ? IsometryTag::PositiveParabolic : IsometryTag::NegativeParabolic, 0.0};
}

double theta(const GroupElement& g, double cls_tol) {
    IsometryClass cls = classify(g, cls_tol);
    switch (cls.tag) {
        case IsometryTag::Hyperbolic:
        case IsometryTag::PositiveParabolic:
            return 0.0;
        case IsometryTag::NegativeParabolic:
        case IsometryTag::Identity:
            return kTwoPi;
        case IsometryTag::Elliptic:
            return cls.angle;
    }
    return 0.0;
}

double translation_length(const GroupElement& g, double cls_tol) {
    if (classify(g, cls_tol).tag != IsometryTag::Hyperbolic) return 0.0;
    return 2.0 * std::acosh(std::abs(g.trace()) / 2.0);
}

GroupElement base_change(std::complex<double> p) {
    double u = p.real(), v = p.imag();
    if (!(v > 0.0) || !std::isfinite(u) || !std::isfinite(v)) {
        throw Error(Errc::InvalidCenter, "point must lie in the open upper half-plane");
    }
    double s = std::sqrt(v);
    return {s, u / s, 0.0, 1.0 / s};
}

GroupElement transporter(std::complex<double> from, std::complex<double> to) {
    return base_change(to) * base_change(from).inverse();
}

GroupElement rotation_any(std::complex<double> center, double angle) {
    if (!std::isfinite(angle)) throw Error(Errc::InvalidInput, "non-finite rotation angle");
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    GroupElement bc = base_change(center);
    double c = std::cos(a / 2.0), s = std::sin(a / 2.0);
    GroupElement r{c, -s, s, c};
    return bc * r * bc.inverse();
}

GroupElement rotation(std::complex<double> center, double angle) {
    if (!(angle > 0.0 && angle < kTwoPi)) {
        std::ostringstream os;
        os << "rotation angle must lie in (0, 2pi), got " << angle;
        throw Error(Errc::InvalidInput, os.str());
    }
    return rotation_any(center, angle);
}

std::complex<double> fixed_point_elliptic(const GroupElement& g, double cls_tol) {
    if (classify(g, cls_tol).tag != IsometryTag::Elliptic) {
        throw Error(Errc::NotElliptic, "fixed point in the upper half-plane requires |trace| < 2");
    }
    return elliptic_fixed_point(g);
}

AntiElement reflection(std::complex<double> p, std::complex<double> q) {
    bool pinf = std::isinf(p.real()) || std::isinf(p.imag());
    bool qinf = std::isinf(q.real()) || std::isinf(q.imag());
    if (pinf && qinf) {
        throw Error(Errc::DegenerateGeodesic, "both points at infinity");
    }
    if (pinf || qinf) {
        // Vertical geodesic through the finite point: z -> 2x0 - conj(z).
        double x0 = (pinf ? q : p).real();
        return {-1.0, 2.0 * x0, 0.0, 1.0};
    }
    if (std::abs(p - q) < 1e-12 * (1.0 + std::abs(p) + std::abs(q))) {
        throw Error(Errc::DegenerateGeodesic, "points coincide; no unique geodesic");
    }
    double dx = q.real() - p.real();
    if (std::abs(dx) < 1e-13 * (1.0 + std::abs(p) + std::abs(q))) {
        double x0 = 0.5 * (p.real() + q.real());
        return {-1.0, 2.0 * x0, 0.0, 1.0};
    }
    // Circular geodesic: center s on the real axis equidistant from p and q,
    // then the inversion z -> s + r^2/(conj(z) - s), normalized to det -1.
    double s = (std::norm(q) - std::norm(p)) / (2.0 * dx);
    double r2 = std::norm(p - s);
    double r = std::sqrt(r2);
    return {s / r, (r2 - s * s) / r, 1.0 / r, -s / r};
}

GroupElement compose(const AntiElement& s, const AntiElement& t) {
    // s(t(z)) = M_s conj(M_t conj(z)) = (M_s M_t) z; both have det -1, so the
    // product determinant is +1.
    return GroupElement::from_entries(s.a * t.a + s.b * t.c, s.a * t.b + s.b * t.d,
                                      s.c * t.a + s.d * t.c, s.c * t.b + s.d * t.d);
}

GroupElement mirror_conjugate(const GroupElement& g) {
    return {g.a, -g.b, -g.c, g.d};
}

AntiElement mirror_reflect(const GroupElement& g) {
    // (z -> -conj(z)) composed after g.
    return {-g.a, -g.b, g.c, g.d};
}

GroupElement exp_sl2(double x, double y, double z) {
    // X^2 = (x^2 + yz) I, so the series collapses to cosh/sinh or cos/sin.
    double disc = x * x + y * z;
    double c, s;  // exp(X) = c I + s X
    if (disc > 1e-12) {
        double m = std::sqrt(disc);
        c = std::cosh(m);
        s = std::sinh(m) / m;
    } else if (disc < -1e-12) {
        double m = std::sqrt(-disc);
        c = std::cos(m);
        s = std::sin(m) / m;
    } else {
        c = 1.0 + disc / 2.0;
        s = 1.0 + disc / 6.0;
    }
    return GroupElement::from_entries(c + s * x, s * y, s * z, c - s * x);
}

}  // namespace sphererep
