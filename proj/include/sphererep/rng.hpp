#pragma once

#include <cmath>
#include <cstdint>

namespace sphererep {

// Counter-based generator: every (seed, stream) pair is an independent
// deterministic sequence, so parallel sweeps can key stream = trial index and
// produce the same numbers no matter how trials are scheduled across threads.
// Core step is splitmix64, which is plenty for sampling test inputs.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        state_ = mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
        // Decorrelate streams that differ only in low bits.
        state_ = mix(state_ ^ mix(stream));
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Uniform in {0, 1, ..., m-1}. Modulo bias is irrelevant at our m.
    std::uint64_t next_below(std::uint64_t m) {
        return next_u64() % m;
    }

    // Standard normal via Box-Muller; recomputes both uniforms each call so the
    // generator stays a pure function of its counter (no cached half-sample).
    double next_normal() {
        double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace sphererep
