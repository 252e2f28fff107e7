#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace smc {

// Counter-based 64-bit generator (splitmix64). Construction is a handful of
// arithmetic ops, which matters here: the engines derive a fresh stream for
// every (particle, observation) pair so that scheduling order never perturbs
// model randomness.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// murmur3-style finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdull;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ull;
    return z ^ (z >> 33);
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    return mix64(h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2)));
}

// Purpose tags keep independent uses of the master seed from colliding.
enum class StreamKind : std::uint64_t {
    Transition = 1,  // model forward simulation, keyed by (lineage, stage)
    BranchCoin = 2,  // offspring randomization, keyed by (lineage, stage)
    Scheduler = 3,   // queue release order
    Permutation = 4, // per-stage shuffles in the permuted replay mode
    Resample = 5,    // multinomial resampling in the synchronous baselines
    Mcmc = 6,        // iterated conditional sweeps
    Simulate = 7,    // synthetic dataset generation
};

inline SplitMix64 derive_stream(std::uint64_t master_seed, StreamKind kind,
                                std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = mix64(master_seed);
    h = hash_combine(h, static_cast<std::uint64_t>(kind));
    h = hash_combine(h, a);
    h = hash_combine(h, b);
    return SplitMix64(h);
}

// Lineage identifiers: children derive theirs from the parent's id and the
// child ordinal, so a particle's randomness is a function of its ancestry
// alone, not of when the scheduler happened to run it.
inline std::uint64_t root_lineage(std::uint64_t root_index) {
    return mix64(0x9d8f3c5a1b2e4d60ull ^ (root_index + 1));
}

inline std::uint64_t child_lineage(std::uint64_t parent, std::uint64_t child_index) {
    return hash_combine(parent, child_index + 1);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(SplitMix64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t uniform_index(SplitMix64& rng, std::uint64_t n) {
    // n is tiny relative to 2^64 everywhere this is used; modulo bias is
    // below any testable level.
    return rng() % n;
}

// Standard normal via Box-Muller; exactly two draws per variate, so streams
// advance identically on every platform.
inline double normal01(SplitMix64& rng) {
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;         // [0, 1)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace smc
