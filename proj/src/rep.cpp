#include "sphererep/rep.hpp"

#include <cmath>
#include <sstream>

#include "sphererep/rng.hpp"

namespace sphererep {

SphereRep new_rep(std::vector<GroupElement> gens, double relation_tol) {
    if (gens.size() < 3) {
        throw Error(Errc::InvalidInput, "a punctured-sphere representation needs n >= 3 generators");
    }
    GroupElement prod = GroupElement::identity();
    for (const GroupElement& g : gens) prod = prod * g;
    double residual = psl_dist(prod, GroupElement::identity());
    if (residual > relation_tol) {
        std::ostringstream os;
        os << "defining relation fails: product is " << residual
           << " from the identity (tolerance " << relation_tol << ")";
        throw Error(Errc::RelationViolated, os.str());
    }
    return {std::move(gens)};
}

GroupElement prefix_product(const SphereRep& rep, int i) {
    if (i < 0 || i > rep.n()) throw Error(Errc::InvalidRange, "prefix length out of range");
    GroupElement prod = GroupElement::identity();
    for (int k = 0; k < i; ++k) prod = prod * rep.gens[static_cast<std::size_t>(k)];
    return prod;
}

long relative_euler_class(const SphereRep& rep, const Tolerances& tol) {
    return product_power(rep.gens, tol);
}

double big_theta(const SphereRep& rep, double cls_tol) {
    double sum = 0.0;
    for (const GroupElement& g : rep.gens) sum += theta(g, cls_tol);
    return sum;
}

double volume(const SphereRep& rep, const Tolerances& tol) {
    return kTwoPi * static_cast<double>(relative_euler_class(rep, tol)) -
           big_theta(rep, tol.cls);
}

SphereRep mirror(const SphereRep& rep) {
    SphereRep out;
    out.gens.reserve(rep.gens.size());
    for (const GroupElement& g : rep.gens) out.gens.push_back(mirror_conjugate(g));
    return out;
}

namespace {

// Snap-aware ceil/floor of Theta/2pi: values within 1e-9 of an integer count
// as that integer on both sides.
void theta_bounds(double big_theta_value, long& ceil_out, long& floor_out) {
    double ratio = big_theta_value / kTwoPi;
    double nearest = std::nearbyint(ratio);
    if (std::abs(ratio - nearest) <= 1e-9) {
        ceil_out = floor_out = static_cast<long>(nearest);
    } else {
        ceil_out = static_cast<long>(std::ceil(ratio));
        floor_out = static_cast<long>(std::floor(ratio));
    }
}

}  // namespace

EulerReport check_milnor_wood(const SphereRep& rep, const Tolerances& tol) {
    EulerReport report;
    report.n = rep.n();
    report.euler = relative_euler_class(rep, tol);
    report.theta_vector.reserve(rep.gens.size());
    for (const GroupElement& g : rep.gens) {
        IsometryClass cls = classify(g, tol.cls);
        switch (cls.tag) {
            case IsometryTag::Identity:
                report.l += 2;
                report.theta_vector.push_back(kTwoPi);
                break;
            case IsometryTag::Elliptic:
                report.l += 1;
                report.theta_vector.push_back(cls.angle);
                break;
            case IsometryTag::PositiveParabolic:
                report.l += 1;
                report.theta_vector.push_back(0.0);
                break;
            case IsometryTag::NegativeParabolic:
                report.l += 1;
                report.theta_vector.push_back(kTwoPi);
                break;
            case IsometryTag::Hyperbolic:
                report.theta_vector.push_back(0.0);
                break;
        }
    }
    for (double th : report.theta_vector) report.big_theta += th;
    report.volume = kTwoPi * static_cast<double>(report.euler) - report.big_theta;

    long chi_abs = report.n - 2;
    long ceil_ratio = 0, floor_ratio = 0;
    theta_bounds(report.big_theta, ceil_ratio, floor_ratio);
    report.mw_lower = std::min(-chi_abs + report.l, ceil_ratio);
    report.mw_upper = std::max(chi_abs, floor_ratio);
    report.super_maximal =
        report.euler == report.n - 1 || report.euler == report.n;

    if (report.euler < report.mw_lower || report.euler > report.mw_upper) {
        std::ostringstream os;
        os << "Euler class " << report.euler << " escapes [" << report.mw_lower << ", "
           << report.mw_upper << "] (n=" << report.n << ", l=" << report.l
           << ", Theta=" << report.big_theta << ")";
        throw Error(Errc::MWViolation, os.str());
    }
    return report;
}

bool is_super_maximal(const SphereRep& rep, const Tolerances& tol) {
    long eu = relative_euler_class(rep, tol);
    return eu == rep.n() - 1 || eu == rep.n();
}

std::pair<SphereRep, SphereRep> restrict_at(const SphereRep& rep, int i, const Tolerances& tol) {
    if (i < 1 || i > rep.n() - 3) {
        std::ostringstream os;
        os << "separating index must lie in [1, n-3], got " << i << " for n=" << rep.n();
        throw Error(Errc::InvalidRange, os.str());
    }
    GroupElement b = prefix_product(rep, i + 1);
    std::vector<GroupElement> first(rep.gens.begin(), rep.gens.begin() + (i + 1));
    first.push_back(b.inverse());
    std::vector<GroupElement> second;
    second.push_back(b);
    second.insert(second.end(), rep.gens.begin() + (i + 1), rep.gens.end());
    return {new_rep(std::move(first), tol.relation), new_rep(std::move(second), tol.relation)};
}

long gluing_defect(IsometryTag tag) {
    switch (tag) {
        case IsometryTag::Identity: return 2;
        case IsometryTag::Hyperbolic: return 0;
        default: return 1;
    }
}

SphereRep conjugate_tail(const SphereRep& rep, int first, const GroupElement& h,
                         double relation_tol) {
    if (first < 1 || first > rep.n() + 1) {
        throw Error(Errc::InvalidRange, "tail start out of range");
    }
    std::vector<GroupElement> gens = rep.gens;
    GroupElement hinv = h.inverse();
    for (std::size_t j = static_cast<std::size_t>(first - 1); j < gens.size(); ++j) {
        gens[j] = h * gens[j] * hinv;
    }
    return new_rep(std::move(gens), relation_tol);
}

SphereRep random_rep(int n, std::uint64_t seed, std::uint64_t stream) {
    if (n < 3) throw Error(Errc::InvalidInput, "need n >= 3");
    Rng rng(seed, stream);
    std::vector<GroupElement> gens;
    gens.reserve(static_cast<std::size_t>(n));
    GroupElement prod = GroupElement::identity();
    for (int i = 0; i + 1 < n; ++i) {
        GroupElement g = exp_sl2(rng.next_normal(), rng.next_normal(), rng.next_normal());
        gens.push_back(g);
        prod = prod * g;
    }
    gens.push_back(prod.inverse());
    return {std::move(gens)};
}

}  // namespace sphererep
