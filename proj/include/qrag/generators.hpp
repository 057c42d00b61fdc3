#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "qrag/instance.hpp"
#include "qrag/rng.hpp"

namespace qrag {

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters for random instances. The skew designates one keyword whose
/// sampling weight is `bias` against 1 for the rest, so a unique most frequent
/// keyword exists with high probability; `noise` is the chance a word is a
/// fresh non-keyword string instead.
struct RandomSpec {
    std::size_t d = 1;
    std::size_t m = 1;
    std::size_t k = 1;
    std::uint64_t seed = 0;
    std::size_t favored = 1;  // keyword index 1..d
    double bias = 4.0;        // >= 0; 1 means uniform
    double noise = 0.0;       // in [0, 1)
};

namespace detail {

inline BitString bits_of_value(std::uint64_t value, std::size_t k) {
    BitString s(k);
    for (std::size_t i = 0; i < k; ++i)
        s.set(i, static_cast<Bit>((value >> (k - 1 - i)) & 1u));
    return s;
}

inline BitString random_bits(Rng& rng, std::size_t k) {
    BitString s(k);
    for (std::size_t i = 0; i < k; ++i) s.set(i, rng.bit());
    return s;
}

struct BitStringHash {
    std::size_t operator()(const BitString& s) const {
        std::size_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < s.size(); ++i) h = (h ^ s.bit(i)) * 1099511628211ull;
        return h;
    }
};

/// d distinct uniform strings of length k. Rejection sampling when the
/// universe is sparse; a partial shuffle of the enumerated universe when d is
/// a sizable fraction of 2^k (exact even when d is all of it). The caller has
/// already ruled out d > 2^k.
inline std::vector<BitString> distinct_keywords(Rng& rng, std::size_t d, std::size_t k) {
    if (k > 22 || d <= (std::size_t{1} << k) / 64 + 1) {
        std::unordered_set<BitString, BitStringHash> seen;
        std::vector<BitString> out;
        out.reserve(d);
        std::size_t attempts = 0;
        const std::size_t cap = 64 * d + 1024;
        while (out.size() < d) {
            if (++attempts > cap)
                throw GenerationError("keyword sampling did not converge; d too close to 2^k");
            BitString s = random_bits(rng, k);
            if (seen.insert(s).second) out.push_back(std::move(s));
        }
        return out;
    }
    // dense case: partial Fisher-Yates over the enumerated universe
    const std::uint64_t total = std::uint64_t{1} << k;
    std::vector<std::uint64_t> pool(total);
    std::iota(pool.begin(), pool.end(), 0ull);
    std::vector<BitString> out;
    out.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        const std::uint64_t j = i + rng.uniform_u64(total - i);
        std::swap(pool[i], pool[j]);
        out.push_back(bits_of_value(pool[i], k));
    }
    return out;
}

}  // namespace detail

inline Instance gen_random(const RandomSpec& spec) {
    if (spec.d == 0 || spec.m == 0 || spec.k == 0)
        throw GenerationError("gen_random: d, m, k must be positive");
    if (spec.favored == 0 || spec.favored > spec.d)
        throw GenerationError("gen_random: favored index out of 1..d");
    if (spec.bias < 0.0) throw GenerationError("gen_random: bias must be >= 0");
    if (spec.noise < 0.0 || spec.noise >= 1.0)
        throw GenerationError("gen_random: noise must be in [0, 1)");
    if (spec.k < 40 && spec.d > (std::size_t{1} << spec.k))
        throw GenerationError("cannot generate d distinct keywords: d > 2^k");

    Rng rng(spec.seed);
    std::vector<BitString> keywords = detail::distinct_keywords(rng, spec.d, spec.k);
    std::unordered_set<BitString, detail::BitStringHash> keyword_set(keywords.begin(),
                                                                     keywords.end());
    const bool universe_exhausted = spec.k < 40 && spec.d == (std::size_t{1} << spec.k);

    std::vector<BitString> words;
    words.reserve(spec.m);
    const double total_weight = spec.bias + static_cast<double>(spec.d - 1);
    for (std::size_t j = 0; j < spec.m; ++j) {
        if (spec.noise > 0.0 && !universe_exhausted && rng.coin(spec.noise)) {
            // a word that matches no keyword; falls through to keyword
            // sampling if the draw keeps colliding
            bool placed = false;
            for (int attempt = 0; attempt < 100; ++attempt) {
                BitString s = detail::random_bits(rng, spec.k);
                if (!keyword_set.count(s)) {
                    words.push_back(std::move(s));
                    placed = true;
                    break;
                }
            }
            if (placed) continue;
        }
        std::size_t pick;
        if (spec.d == 1) {
            pick = 1;
        } else if (total_weight <= 0.0) {
            pick = 1 + rng.uniform_u64(spec.d);  // bias 0 with d > 1: uniform fallback
        } else if (rng.uniform_double() * total_weight < spec.bias) {
            pick = spec.favored;
        } else {
            pick = 1 + rng.uniform_u64(spec.d - 1);
            if (pick >= spec.favored) ++pick;  // skip the favored slot
        }
        words.push_back(keywords[pick - 1]);
    }
    return Instance(std::move(keywords), std::move(words), spec.k);
}

/// The adversarial two-keyword family. Keywords are (1^k, 0^k). The first
/// half of the words is 1^k, the second half 0^k; in variant 2 word z of the
/// first half has bit u flipped to 0, which moves the majority to 0^k. Odd m
/// appends the filler 1^(k/2) 0^(k/2), so odd m needs even k.
struct HardInstanceSpec {
    std::size_t m = 2;
    std::size_t k = 2;
    int variant = 1;     // 1 or 2
    std::size_t z = 0;   // variant 2: index in 1..floor(m/2)
    std::size_t u = 0;   // variant 2: position in 1..k
};

inline Instance gen_hard(const HardInstanceSpec& spec) {
    if (spec.m == 0 || spec.k == 0) throw GenerationError("gen_hard: m, k must be positive");
    if (spec.variant != 1 && spec.variant != 2)
        throw GenerationError("gen_hard: variant must be 1 or 2");
    if (spec.m % 2 == 1 && spec.k % 2 == 1)
        throw GenerationError("gen_hard: odd m needs even k for the filler word");
    const std::size_t t = spec.m / 2;
    if (spec.variant == 2) {
        if (spec.z < 1 || spec.z > t)
            throw GenerationError("gen_hard: z must be in 1..floor(m/2)");
        if (spec.u < 1 || spec.u > spec.k) throw GenerationError("gen_hard: u must be in 1..k");
    }

    std::vector<BitString> keywords;
    keywords.push_back(BitString::ones(spec.k));
    keywords.push_back(BitString::zeros(spec.k));

    std::vector<BitString> words;
    words.reserve(spec.m);
    for (std::size_t j = 1; j <= t; ++j) {
        BitString w = BitString::ones(spec.k);
        if (spec.variant == 2 && j == spec.z) w.set(spec.u - 1, 0);
        words.push_back(std::move(w));
    }
    for (std::size_t j = 0; j < t; ++j) words.push_back(BitString::zeros(spec.k));
    if (spec.m % 2 == 1) {
        BitString filler(spec.k);
        for (std::size_t i = 0; i < spec.k / 2; ++i) filler.set(i, 1);
        words.push_back(std::move(filler));
    }
    return Instance(std::move(keywords), std::move(words), spec.k);
}

}  // namespace qrag
