#include "sphererep/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace sphererep {

namespace {

void validate_alpha(const std::vector<double>& alpha) {
    if (alpha.size() < 3) {
        throw Error(Errc::InvalidInput, "need at least 3 peripheral angles");
    }
    for (double a : alpha) {
        if (!(a > 0.0 && a < kTwoPi)) {
            std::ostringstream os;
            os << "peripheral angles must lie in (0, 2pi), got " << a;
            throw Error(Errc::InvalidAngles, os.str());
        }
    }
}

// Solve the square system rows . x = rhs by Gaussian elimination with partial
// pivoting. Returns false when the pivot collapses (singular subset).
bool solve_square(std::vector<std::vector<double>> rows, std::vector<double> rhs,
                  std::vector<double>& out) {
    std::size_t d = rows.size();
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < d; ++r) {
            if (std::abs(rows[r][col]) > std::abs(rows[piv][col])) piv = r;
        }
        if (std::abs(rows[piv][col]) < 1e-12) return false;
        std::swap(rows[piv], rows[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col) continue;
            double f = rows[r][col] / rows[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < d; ++c) rows[r][c] -= f * rows[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    out.assign(d, 0.0);
    for (std::size_t r = 0; r < d; ++r) out[r] = rhs[r] / rows[r][r];
    return true;
}

double det_gauss(std::vector<std::vector<double>> rows) {
    std::size_t d = rows.size();
    double det = 1.0;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < d; ++r) {
            if (std::abs(rows[r][col]) > std::abs(rows[piv][col])) piv = r;
        }
        if (rows[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(rows[piv], rows[col]);
            det = -det;
        }
        det *= rows[col][col];
        for (std::size_t r = col + 1; r < d; ++r) {
            double f = rows[r][col] / rows[col][col];
            for (std::size_t c = col; c < d; ++c) rows[r][c] -= f * rows[col][c];
        }
    }
    return det;
}

std::complex<double> cayley(std::complex<double> z) {
    return (z - std::complex<double>(0.0, 1.0)) / (z + std::complex<double>(0.0, 1.0));
}

}  // namespace

MomentVector moment_map(const SphereRep& rep, const Tolerances& tol) {
    MomentVector mv;
    int d = rep.n() - 3;
    mv.beta.reserve(static_cast<std::size_t>(std::max(d, 0)));
    GroupElement b = rep.gens[0];
    for (int i = 1; i <= d; ++i) {
        b = b * rep.gens[static_cast<std::size_t>(i)];
        IsometryClass cls = classify(b, tol.cls);
        if (cls.tag != IsometryTag::Elliptic) {
            std::ostringstream os;
            os << "pants curve " << i << " has non-elliptic holonomy";
            throw Error(Errc::NonEllipticPantsCurve, os.str());
        }
        // Angle of the inverse holonomy: the curve bounding punctures 1..i+1
        // from the outside.
        mv.beta.push_back(kTwoPi - cls.angle);
    }
    return mv;
}

DelzantPolytope delzant_polytope(const std::vector<double>& alpha) {
    validate_alpha(alpha);
    int n = static_cast<int>(alpha.size());
    int d = n - 3;
    double sum = 0.0;
    for (double a : alpha) sum += a;
    double lambda = sum - static_cast<double>(n - 1) * kTwoPi;
    if (!(lambda > 0.0)) {
        std::ostringstream os;
        os << "angle sum " << sum << " must exceed 2(n-1)pi = "
           << static_cast<double>(n - 1) * kTwoPi;
        throw Error(Errc::EmptyPolytope, os.str());
    }

    std::vector<double> abar(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) abar[i] = kTwoPi - alpha[i];

    DelzantPolytope p;
    p.dim = d;
    p.lambda = lambda;

    if (d == 0) {
        // Single pants: the one constraint is the constant angle surplus.
        p.halfspaces.push_back({{}, lambda});
        p.vertices.push_back({});
        return p;
    }

    auto unit = [d](int k, double s) {
        std::vector<double> v(static_cast<std::size_t>(d), 0.0);
        v[static_cast<std::size_t>(k)] = s;
        return v;
    };

    p.halfspaces.push_back({unit(0, 1.0), -(abar[0] + abar[1])});
    for (int i = 2; i <= d; ++i) {
        std::vector<double> nrm(static_cast<std::size_t>(d), 0.0);
        nrm[static_cast<std::size_t>(i - 1)] = 1.0;
        nrm[static_cast<std::size_t>(i - 2)] = -1.0;
        p.halfspaces.push_back({std::move(nrm), -abar[static_cast<std::size_t>(i)]});
    }
    p.halfspaces.push_back(
        {unit(d - 1, -1.0), kTwoPi - abar[alpha.size() - 2] - abar[alpha.size() - 1]});

    // Vertices as the affine image of the standard-simplex corners 0, e_1...e_d:
    // coordinate k is lambda * (corner prefix sum) + sum of the first k+1 abar.
    std::vector<double> abar_prefix(alpha.size() + 1, 0.0);
    for (std::size_t i = 0; i < alpha.size(); ++i) abar_prefix[i + 1] = abar_prefix[i] + abar[i];
    for (int m = 0; m <= d; ++m) {  // m = 0 is the zero corner, else e_m
        std::vector<double> v(static_cast<std::size_t>(d));
        for (int k = 1; k <= d; ++k) {
            double step = (m >= 1 && k >= m) ? lambda : 0.0;
            v[static_cast<std::size_t>(k - 1)] = step + abar_prefix[static_cast<std::size_t>(k + 1)];
        }
        p.vertices.push_back(std::move(v));
    }

    for (const auto& v : p.vertices) {
        if (!polytope_contains(p, v, 1e-9)) {
            throw Error(Errc::PolytopeViolation, "closed-form vertex escapes its own halfspaces");
        }
    }
    return p;
}

double slack(const Halfspace& h, const std::vector<double>& point) {
    if (h.normal.size() != point.size()) {
        throw Error(Errc::InvalidInput, "dimension mismatch in halfspace evaluation");
    }
    double s = h.offset;
    for (std::size_t i = 0; i < point.size(); ++i) s += h.normal[i] * point[i];
    return s;
}

bool polytope_contains(const DelzantPolytope& p, const std::vector<double>& point, double tol) {
    for (const Halfspace& h : p.halfspaces) {
        if (slack(h, point) < -tol) return false;
    }
    return true;
}

double polytope_volume(const DelzantPolytope& p) {
    std::size_t d = static_cast<std::size_t>(p.dim);
    if (p.vertices.size() != d + 1) {
        throw Error(Errc::DegenerateSimplex, "simplex needs dim+1 vertices");
    }
    if (d == 0) return 1.0;
    std::vector<std::vector<double>> edges;
    edges.reserve(d);
    double scale = 0.0;
    for (std::size_t m = 1; m <= d; ++m) {
        std::vector<double> e(d);
        for (std::size_t k = 0; k < d; ++k) {
            e[k] = p.vertices[m][k] - p.vertices[0][k];
            scale = std::max(scale, std::abs(e[k]));
        }
        edges.push_back(std::move(e));
    }
    double det = det_gauss(edges);
    double floor_scale = std::pow(std::max(scale, 1e-30), static_cast<double>(d));
    if (std::abs(det) <= 1e-14 * floor_scale) {
        throw Error(Errc::DegenerateSimplex, "vertex simplex has vanishing volume");
    }
    double fact = 1.0;
    for (std::size_t k = 2; k <= d; ++k) fact *= static_cast<double>(k);
    return std::abs(det) / fact;
}

double symplectic_volume(const std::vector<double>& alpha) {
    DelzantPolytope p = delzant_polytope(alpha);
    std::size_t d = static_cast<std::size_t>(p.dim);
    double fact = 1.0;
    for (std::size_t k = 2; k <= d; ++k) fact *= static_cast<double>(k);
    double sv = std::pow(kPi * p.lambda, static_cast<double>(d)) / fact;
    double cross = std::pow(kPi, static_cast<double>(d)) * polytope_volume(p);
    if (std::abs(sv - cross) > 1e-9 * std::abs(sv)) {
        std::ostringstream os;
        os << "closed-form symplectic volume " << sv << " disagrees with pi^d * Euclidean volume "
           << cross;
        throw Error(Errc::DegenerateSimplex, os.str());
    }
    return sv;
}

std::vector<std::vector<double>> enumerate_vertices(const DelzantPolytope& p) {
    std::size_t d = static_cast<std::size_t>(p.dim);
    std::vector<std::vector<double>> found;
    if (d == 0) {
        bool feasible = true;
        for (const Halfspace& h : p.halfspaces) {
            if (h.offset < -1e-8) feasible = false;
        }
        if (feasible) found.push_back({});
        return found;
    }
    // A simplex has one vertex per facet subset of size dim; with dim+1 facets
    // that is "drop one facet, intersect the rest".
    std::size_t m = p.halfspaces.size();
    for (std::size_t drop = 0; drop < m; ++drop) {
        std::vector<std::vector<double>> rows;
        std::vector<double> rhs;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == drop) continue;
            rows.push_back(p.halfspaces[i].normal);
            rhs.push_back(-p.halfspaces[i].offset);
        }
        if (rows.size() != d) continue;
        std::vector<double> x;
        if (!solve_square(std::move(rows), std::move(rhs), x)) continue;
        if (slack(p.halfspaces[drop], x) < -1e-8) continue;
        bool duplicate = false;
        for (const auto& v : found) {
            double dist = 0.0;
            for (std::size_t k = 0; k < d; ++k) dist = std::max(dist, std::abs(v[k] - x[k]));
            if (dist < 1e-7) duplicate = true;
        }
        if (!duplicate) found.push_back(std::move(x));
    }
    std::sort(found.begin(), found.end());
    return found;
}

SphereRep twist_flow(const SphereRep& rep, int i, double t, const Tolerances& tol) {
    if (i < 1 || i > rep.n() - 3) {
        std::ostringstream os;
        os << "twist index must lie in [1, n-3], got " << i << " for n=" << rep.n();
        throw Error(Errc::InvalidRange, os.str());
    }
    GroupElement b = prefix_product(rep, i + 1);
    IsometryClass cls = classify(b, tol.cls);
    if (cls.tag != IsometryTag::Elliptic) {
        std::ostringstream os;
        os << "pants curve " << i << " has non-elliptic holonomy; twist flow undefined";
        throw Error(Errc::NonEllipticPantsCurve, os.str());
    }
    GroupElement h = rotation_any(fixed_point_elliptic(b, tol.cls), 2.0 * t);
    return conjugate_tail(rep, i + 2, h, tol.relation);
}

double conjugacy_distance(const SphereRep& a, const SphereRep& b, const Tolerances& tol) {
    if (a.n() != b.n()) throw Error(Errc::InvalidInput, "representations have different n");
    std::complex<double> pa = fixed_point_elliptic(a.gens[0], tol.cls);
    std::complex<double> pb = fixed_point_elliptic(b.gens[0], tol.cls);
    GroupElement t = transporter(pb, pa);

    // Remaining freedom is rotation about pa; spend it aligning the second
    // generator's fixed point as seen from pa in the disk chart, where the
    // rotation of angle mu acts by w -> exp(-i mu) w.
    GroupElement to_disk = base_change(pa).inverse();
    std::complex<double> qa = fixed_point_elliptic(a.gens[1], tol.cls);
    std::complex<double> qb = t.apply(fixed_point_elliptic(b.gens[1], tol.cls));
    std::complex<double> wa = cayley(to_disk.apply(qa));
    std::complex<double> wb = cayley(to_disk.apply(qb));
    GroupElement align = GroupElement::identity();
    if (std::abs(wa) > 1e-12 && std::abs(wb) > 1e-12) {
        double mu = std::arg(wb) - std::arg(wa);
        align = rotation_any(pa, mu);
    }
    GroupElement conj = align * t;
    GroupElement conj_inv = conj.inverse();

    double worst = 0.0;
    for (std::size_t j = 0; j < a.gens.size(); ++j) {
        worst = std::max(worst, psl_dist(a.gens[j], conj * b.gens[j] * conj_inv));
    }
    return worst;
}

}  // namespace sphererep
