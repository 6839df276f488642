#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sphererep/rep.hpp"

namespace sphererep {

// Fuzz over random representations: every trial checks the two-sided
// Euler-class bound and the mirror identity eu(rho) + eu(mirror) = l.
// Trials whose classification is ambiguous at tolerance are skipped and
// counted. Deterministic in (n, trials, seed) and independent of thread count:
// each trial derives its randomness from (seed, trial).
struct MwFuzzReport {
    int n = 0;
    long trials = 0;
    std::uint64_t seed = 0;
    long ambiguous_skips = 0;
    long checked = 0;
    long euler_min = 0;
    long euler_max = 0;
    std::vector<long> violation_trials;         // bound failures (MWViolation)
    std::vector<long> mirror_violation_trials;  // eu + eu_mirror != l
    std::vector<std::string> violation_messages;
};

MwFuzzReport fuzz_milnor_wood(int n, long trials, std::uint64_t seed,
                              const Tolerances& tol = {});
MwFuzzReport fuzz_milnor_wood_serial(int n, long trials, std::uint64_t seed,
                                     const Tolerances& tol = {});

// Fuzz of Euler-class additivity under splitting along every pants curve:
// eu = eu' + eu'' - defect, defect read off the separating holonomy's class.
struct GluingReport {
    int n = 0;
    long trials = 0;
    std::uint64_t seed = 0;
    long ambiguous_skips = 0;
    long checked = 0;  // (trial, i) pairs that ran to completion
    std::vector<long> violation_trials;
    std::vector<std::string> violation_messages;
};

GluingReport fuzz_gluing(int n, long trials, std::uint64_t seed, const Tolerances& tol = {});
GluingReport fuzz_gluing_serial(int n, long trials, std::uint64_t seed,
                                const Tolerances& tol = {});

}  // namespace sphererep
