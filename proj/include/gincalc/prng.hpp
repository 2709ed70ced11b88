#ifndef GINCALC_PRNG_HPP
#define GINCALC_PRNG_HPP

#include <cstdint>

namespace gincalc {

/// splitmix64: the documented deterministic recurrence behind all sampling.
/// state_{k+1} = state_k + 0x9E3779B97F4A7C15; output is the finalizer below.
/// Same seed, same stream, on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, m), rejection-sampled to avoid modulo bias.
    std::uint64_t below(std::uint64_t m) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
        std::uint64_t z;
        do {
            z = next();
        } while (z >= limit);
        return z % m;
    }

    /// Uniform integer in [-bound, bound].
    long symmetric(long bound) {
        return static_cast<long>(below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
    }

private:
    std::uint64_t state_;
};

/// Per-trial seed: one splitmix64 step of master xor (index+1) * golden gamma,
/// so trials are individually reproducible.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial_index) {
    return SplitMix64(master ^ ((trial_index + 1) * 0x9E3779B97F4A7C15ULL)).next();
}

}  // namespace gincalc

#endif
