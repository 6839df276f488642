#include "sphererep/sweeps.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sphererep {

namespace {

struct MwOutcome {
    enum Kind { kOk, kSkip, kViolation, kMirrorViolation } kind = kOk;
    long euler = 0;
    std::string message;
};

MwOutcome mw_trial(int n, std::uint64_t seed, long trial, const Tolerances& tol) {
    SphereRep rep = random_rep(n, seed, static_cast<std::uint64_t>(trial));
    try {
        EulerReport report = check_milnor_wood(rep, tol);
        long eu_mirror = relative_euler_class(mirror(rep), tol);
        if (report.euler + eu_mirror != report.l) {
            std::string msg = "eu=" + std::to_string(report.euler) +
                              " eu_mirror=" + std::to_string(eu_mirror) +
                              " l=" + std::to_string(report.l);
            return {MwOutcome::kMirrorViolation, report.euler, std::move(msg)};
        }
        return {MwOutcome::kOk, report.euler, {}};
    } catch (const Error& e) {
        if (e.code() == Errc::AmbiguousClass) return {MwOutcome::kSkip, 0, {}};
        return {MwOutcome::kViolation, 0, e.what()};
    }
}

MwFuzzReport mw_assemble(int n, std::uint64_t seed, std::vector<MwOutcome>&& outcomes) {
    MwFuzzReport report;
    report.n = n;
    report.trials = static_cast<long>(outcomes.size());
    report.seed = seed;
    bool first = true;
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
        const MwOutcome& o = outcomes[t];
        switch (o.kind) {
            case MwOutcome::kSkip:
                ++report.ambiguous_skips;
                break;
            case MwOutcome::kViolation:
                report.violation_trials.push_back(static_cast<long>(t));
                report.violation_messages.push_back(o.message);
                break;
            case MwOutcome::kMirrorViolation:
                ++report.checked;
                report.mirror_violation_trials.push_back(static_cast<long>(t));
                report.violation_messages.push_back(o.message);
                break;
            case MwOutcome::kOk:
                ++report.checked;
                if (first) {
                    report.euler_min = report.euler_max = o.euler;
                    first = false;
                } else {
                    report.euler_min = std::min(report.euler_min, o.euler);
                    report.euler_max = std::max(report.euler_max, o.euler);
                }
                break;
        }
    }
    return report;
}

struct GluingOutcome {
    enum Kind { kOk, kSkip, kViolation } kind = kOk;
    std::string message;
};

GluingOutcome gluing_trial(int n, std::uint64_t seed, long trial, const Tolerances& tol) {
    SphereRep rep = random_rep(n, seed, static_cast<std::uint64_t>(trial));
    try {
        long eu = relative_euler_class(rep, tol);
        for (int i = 1; i <= n - 3; ++i) {
            auto [first, second] = restrict_at(rep, i, tol);
            IsometryTag tag = classify(prefix_product(rep, i + 1), tol.cls).tag;
            long expected = eu + gluing_defect(tag);
            long got = relative_euler_class(first, tol) + relative_euler_class(second, tol);
            if (got != expected) {
                std::string msg = "i=" + std::to_string(i) + ": eu'+eu''=" + std::to_string(got) +
                                  " but eu+defect=" + std::to_string(expected);
                return {GluingOutcome::kViolation, std::move(msg)};
            }
        }
        return {GluingOutcome::kOk, {}};
    } catch (const Error& e) {
        if (e.code() == Errc::AmbiguousClass) return {GluingOutcome::kSkip, {}};
        return {GluingOutcome::kViolation, e.what()};
    }
}

GluingReport gluing_assemble(int n, std::uint64_t seed, std::vector<GluingOutcome>&& outcomes) {
    GluingReport report;
    report.n = n;
    report.trials = static_cast<long>(outcomes.size());
    report.seed = seed;
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
        const GluingOutcome& o = outcomes[t];
        if (o.kind == GluingOutcome::kSkip) {
            ++report.ambiguous_skips;
        } else if (o.kind == GluingOutcome::kViolation) {
            report.violation_trials.push_back(static_cast<long>(t));
            report.violation_messages.push_back(o.message);
        } else {
            ++report.checked;
        }
    }
    return report;
}

void validate_sweep(int n, long trials) {
    if (n < 3) throw Error(Errc::InvalidInput, "need n >= 3");
    if (trials <= 0) throw Error(Errc::InvalidInput, "need a positive trial count");
}

}  // namespace

MwFuzzReport fuzz_milnor_wood_serial(int n, long trials, std::uint64_t seed,
                                     const Tolerances& tol) {
    validate_sweep(n, trials);
    std::vector<MwOutcome> outcomes(static_cast<std::size_t>(trials));
    for (long t = 0; t < trials; ++t) {
        outcomes[static_cast<std::size_t>(t)] = mw_trial(n, seed, t, tol);
    }
    return mw_assemble(n, seed, std::move(outcomes));
}

MwFuzzReport fuzz_milnor_wood(int n, long trials, std::uint64_t seed, const Tolerances& tol) {
    validate_sweep(n, trials);
    std::vector<MwOutcome> outcomes(static_cast<std::size_t>(trials));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long t = 0; t < trials; ++t) {
        outcomes[static_cast<std::size_t>(t)] = mw_trial(n, seed, t, tol);
    }
    return mw_assemble(n, seed, std::move(outcomes));
}

GluingReport fuzz_gluing_serial(int n, long trials, std::uint64_t seed, const Tolerances& tol) {
    validate_sweep(n, trials);
    if (n < 4) throw Error(Errc::InvalidInput, "splitting needs n >= 4");
    std::vector<GluingOutcome> outcomes(static_cast<std::size_t>(trials));
    for (long t = 0; t < trials; ++t) {
        outcomes[static_cast<std::size_t>(t)] = gluing_trial(n, seed, t, tol);
    }
    return gluing_assemble(n, seed, std::move(outcomes));
}

GluingReport fuzz_gluing(int n, long trials, std::uint64_t seed, const Tolerances& tol) {
    validate_sweep(n, trials);
    if (n < 4) throw Error(Errc::InvalidInput, "splitting needs n >= 4");
    std::vector<GluingOutcome> outcomes(static_cast<std::size_t>(trials));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long t = 0; t < trials; ++t) {
        outcomes[static_cast<std::size_t>(t)] = gluing_trial(n, seed, t, tol);
    }
    return gluing_assemble(n, seed, std::move(outcomes));
}

}  // namespace sphererep
