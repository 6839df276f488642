#pragma once

#include <cstdint>
#include <vector>

#include "sphererep/rep.hpp"

namespace sphererep {

// Freely reduced word in the peripheral generators; letter +k means c_k,
// -k means c_k^{-1}, 1-based indices.
struct Word {
    std::vector<int> letters;
};

Word reduce(std::vector<int> letters);

// c_i c_{i+1} ... c_j, a simple closed curve enclosing punctures i..j. The full
// product (1, n) is excluded: it is the relation, not a curve.
Word base_curve(int i, int j, int n);

// Half-twist substitution c_k -> c_k c_{k+1} c_k^{-1}, c_{k+1} -> c_k (sign +1)
// or its inverse (sign -1), applied letterwise and freely reduced. Maps simple
// closed curves to simple closed curves.
Word braid_act(int k, int sign, const Word& w, int n);

GroupElement evaluate(const SphereRep& rep, const Word& w);

struct AuditHit {
    long sample = 0;
    std::vector<int> word;
    double abs_trace = 0.0;
};

struct AuditReport {
    long samples = 0;
    long checked = 0;
    long skipped_long_words = 0;
    double max_abs_trace = 0.0;
    long violation_count = 0;
    long warning_count = 0;
    // Stored hits are capped (counts above are not); enough to diagnose, small
    // enough that a hostile input cannot balloon the report.
    std::vector<AuditHit> violations;
    std::vector<AuditHit> warnings;
    bool truncated = false;
};

// Evaluates `samples` simple-closed-curve words (the base curves first, then
// random braid images of random base curves, braid length <= depth) and
// reports every word whose image has |trace| > 2 + 1e-6. Traces in
// (2, 2+1e-6] are warnings. Words growing past 10^5 letters are skipped and
// counted. Deterministic in (seed); the parallel driver produces the same
// report as the serial one.
AuditReport audit_non_hyperbolic(const SphereRep& rep, int depth, int samples,
                                 std::uint64_t seed);
AuditReport audit_non_hyperbolic_serial(const SphereRep& rep, int depth, int samples,
                                        std::uint64_t seed);

inline constexpr std::size_t kWordLengthCap = 100000;
inline constexpr double kAuditTraceBound = 2.0 + 1e-6;

}  // namespace sphererep
