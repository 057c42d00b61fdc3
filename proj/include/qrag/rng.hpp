#pragma once

#include <cstdint>
#include <random>

namespace qrag {

/// Seeded random source. mt19937_64 supplies the bits; the helpers below do
/// their own (unbiased) mapping so that draws are identical on every platform,
/// which the reproducibility guarantees depend on. Distribution classes from
/// <random> are deliberately not used: their mappings are implementation
/// defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform integer in [0, bound). bound = 0 is invalid.
    std::uint64_t uniform_u64(std::uint64_t bound) {
        // rejection sampling to kill modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_double() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool coin(double p) { return uniform_double() < p; }

    std::uint8_t bit() { return static_cast<std::uint8_t>(eng_() & 1u); }

private:
    std::mt19937_64 eng_;
};

/// Deterministic stream splitting (splitmix64 finalizer). derive_seed(s, i)
/// and derive_seed(s, j) give unrelated streams for i != j.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace qrag
