#include "sphererep/curves.hpp"

#include <cmath>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sphererep/rng.hpp"

namespace sphererep {

Word reduce(std::vector<int> letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int l : letters) {
        if (l == 0) throw Error(Errc::InvalidInput, "zero is not a generator letter");
        if (!out.empty() && out.back() == -l) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return {std::move(out)};
}

Word base_curve(int i, int j, int n) {
    if (i < 1 || j < i || j > n || (i == 1 && j == n)) {
        std::ostringstream os;
        os << "need 1 <= i <= j <= n and (i,j) != (1,n), got (" << i << ", " << j << ") with n="
           << n;
        throw Error(Errc::InvalidRange, os.str());
    }
    Word w;
    w.letters.reserve(static_cast<std::size_t>(j - i + 1));
    for (int k = i; k <= j; ++k) w.letters.push_back(k);
    return w;
}

Word braid_act(int k, int sign, const Word& w, int n) {
    if (k < 1 || k >= n) {
        std::ostringstream os;
        os << "braid index must lie in [1, n-1], got " << k;
        throw Error(Errc::InvalidRange, os.str());
    }
    if (sign != 1 && sign != -1) throw Error(Errc::InvalidInput, "braid sign must be +-1");
    std::vector<int> out;
    out.reserve(w.letters.size() * 2);
    for (int l : w.letters) {
        int abs = l < 0 ? -l : l;
        if (abs < 1 || abs > n) throw Error(Errc::InvalidInput, "letter outside generator range");
        if (sign == 1) {
            if (l == k) {
                out.insert(out.end(), {k, k + 1, -k});
            } else if (l == -k) {
                out.insert(out.end(), {k, -(k + 1), -k});
            } else if (l == k + 1) {
                out.push_back(k);
            } else if (l == -(k + 1)) {
                out.push_back(-k);
            } else {
                out.push_back(l);
            }
        } else {
            if (l == k) {
                out.push_back(k + 1);
            } else if (l == -k) {
                out.push_back(-(k + 1));
            } else if (l == k + 1) {
                out.insert(out.end(), {-(k + 1), k, k + 1});
            } else if (l == -(k + 1)) {
                out.insert(out.end(), {-(k + 1), -k, k + 1});
            } else {
                out.push_back(l);
            }
        }
    }
    return reduce(std::move(out));
}

GroupElement evaluate(const SphereRep& rep, const Word& w) {
    GroupElement prod = GroupElement::identity();
    for (int l : w.letters) {
        int abs = l < 0 ? -l : l;
        if (abs < 1 || abs > rep.n()) {
            throw Error(Errc::InvalidInput, "letter outside generator range");
        }
        const GroupElement& g = rep.gens[static_cast<std::size_t>(abs - 1)];
        prod = prod * (l < 0 ? g.inverse() : g);
    }
    return prod;
}

namespace {

struct SampleOutcome {
    enum Kind { kClean, kWarning, kViolation, kSkipped } kind = kClean;
    double abs_trace = 0.0;
    std::vector<int> word;
};

// One audited word: pick a base curve and a braid string from the sample's own
// generator stream, so the outcome is independent of evaluation order. The
// first `bases` samples take the base curves verbatim.
SampleOutcome audit_one(const SphereRep& rep, const std::vector<Word>& bases, int depth,
                        std::uint64_t seed, long sample) {
    int n = rep.n();
    Rng rng(seed, static_cast<std::uint64_t>(sample));
    Word w;
    long steps = 0;
    if (sample < static_cast<long>(bases.size())) {
        w = bases[static_cast<std::size_t>(sample)];
    } else {
        w = bases[rng.next_below(bases.size())];
        steps = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(depth) + 1));
    }
    for (long s = 0; s < steps; ++s) {
        int k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - 1)));
        int sign = rng.next_below(2) == 0 ? 1 : -1;
        w = braid_act(k, sign, w, n);
        if (w.letters.size() > kWordLengthCap) {
            return {SampleOutcome::kSkipped, 0.0, {}};
        }
    }
    double t = std::abs(evaluate(rep, w).trace());
    if (t > kAuditTraceBound) return {SampleOutcome::kViolation, t, w.letters};
    if (t > 2.0) return {SampleOutcome::kWarning, t, w.letters};
    return {SampleOutcome::kClean, t, {}};
}

AuditReport assemble(std::vector<SampleOutcome>&& outcomes) {
    const std::size_t stored_cap = 64;
    AuditReport report;
    report.samples = static_cast<long>(outcomes.size());
    for (std::size_t s = 0; s < outcomes.size(); ++s) {
        SampleOutcome& o = outcomes[s];
        if (o.kind == SampleOutcome::kSkipped) {
            ++report.skipped_long_words;
            continue;
        }
        ++report.checked;
        report.max_abs_trace = std::max(report.max_abs_trace, o.abs_trace);
        if (o.kind == SampleOutcome::kViolation) {
            ++report.violation_count;
            if (report.violations.size() < stored_cap) {
                report.violations.push_back({static_cast<long>(s), std::move(o.word), o.abs_trace});
            } else {
                report.truncated = true;
            }
        } else if (o.kind == SampleOutcome::kWarning) {
            ++report.warning_count;
            if (report.warnings.size() < stored_cap) {
                report.warnings.push_back({static_cast<long>(s), std::move(o.word), o.abs_trace});
            } else {
                report.truncated = true;
            }
        }
    }
    return report;
}

std::vector<Word> base_curves(int n) {
    std::vector<Word> bases;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            if (i == 1 && j == n) continue;
            bases.push_back(base_curve(i, j, n));
        }
    }
    return bases;
}

}  // namespace

AuditReport audit_non_hyperbolic_serial(const SphereRep& rep, int depth, int samples,
                                        std::uint64_t seed) {
    if (depth < 0 || samples <= 0) {
        throw Error(Errc::InvalidInput, "audit needs depth >= 0 and samples > 0");
    }
    std::vector<Word> bases = base_curves(rep.n());
    std::vector<SampleOutcome> outcomes(static_cast<std::size_t>(samples));
    for (long s = 0; s < samples; ++s) {
        outcomes[static_cast<std::size_t>(s)] = audit_one(rep, bases, depth, seed, s);
    }
    return assemble(std::move(outcomes));
}

AuditReport audit_non_hyperbolic(const SphereRep& rep, int depth, int samples,
                                 std::uint64_t seed) {
    if (depth < 0 || samples <= 0) {
        throw Error(Errc::InvalidInput, "audit needs depth >= 0 and samples > 0");
    }
    std::vector<Word> bases = base_curves(rep.n());
    std::vector<SampleOutcome> outcomes(static_cast<std::size_t>(samples));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long s = 0; s < samples; ++s) {
        outcomes[static_cast<std::size_t>(s)] = audit_one(rep, bases, depth, seed, s);
    }
    return assemble(std::move(outcomes));
}

}  // namespace sphererep
