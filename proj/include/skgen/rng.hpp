#pragma once

// Deterministic, platform-independent randomness for binning codes and
// Monte-Carlo runs. Everything is derived from splitmix64 so that parallel
// and serial evaluation orders produce bit-identical results: bin maps are
// pure per-index hashes and trial streams are keyed by (seed, trial index).

#include <cmath>
#include <cstdint>

namespace skgen {

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stateless hash of (seed, stream tag, index).
inline std::uint64_t keyed_hash(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    std::uint64_t h = seed ^ (tag * 0x9E3779B97F4A7C15ULL);
    h += index * 0xBF58476D1CE4E5B9ULL;
    return splitmix64_mix(h);
}

// Unbiased-enough reduction of a 64-bit hash to [0, range): fixed-point
// multiply, bias below range / 2^64.
inline std::uint64_t reduce_to_range(std::uint64_t h, std::uint64_t range) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(h) * range) >> 64);
}

// Small counter-free generator: a splitmix64 walk from a derived state.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64_mix(seed ^ 0xD1B54A32D192ED03ULL)) {}

    Rng(std::uint64_t seed, std::uint64_t stream)
        : state_(splitmix64_mix(keyed_hash(seed, 0x2545F4914F6CDD1DULL, stream))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64_mix(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    std::uint64_t next_below(std::uint64_t range) { return reduce_to_range(next_u64(), range); }

    // Standard normal via Box-Muller; one draw per call, the paired value is
    // discarded to keep the stream position independent of usage pattern.
    double next_normal() {
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

  private:
    std::uint64_t state_;
};

}  // namespace skgen
