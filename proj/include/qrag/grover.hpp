#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "qrag/amplitude.hpp"
#include "qrag/oracle.hpp"
#include "qrag/rng.hpp"
#include "qrag/util.hpp"

namespace qrag {

struct GroverOptions {
    /// Hard cap on charged queries for this call, iterations plus
    /// verifications. 0 means "derive from the budget factor".
    std::uint64_t max_charged = 0;
    /// Cap as a multiple of ceil(sqrt(N)) when max_charged is 0.
    double budget_factor = 10.0;
};

/// Grover search with an unknown number of marked positions: repeatedly pick
/// an iteration count uniformly below a growing bound (doubling, capped at
/// sqrt(N)), run that many exact Grover iterations, measure, and classically
/// verify the outcome with one addressed query. Each iteration charges one
/// query; so does each verification. Returns a verified marked position, or
/// nullopt once the budget is spent. Never lies: a returned position passed
/// verification.
inline std::optional<std::size_t> grover_search(PredicateOracle& oracle, Rng& rng,
                                                const GroverOptions& options = {}) {
    const std::size_t n = oracle.arity();
    if (n == 0) return std::nullopt;
    const std::size_t root = int_sqrt_ceil(n);
    const std::uint64_t budget =
        options.max_charged > 0
            ? options.max_charged
            : static_cast<std::uint64_t>(std::ceil(options.budget_factor * root));

    const std::vector<std::size_t> marked = collect_marked(oracle);
    // With nothing marked the state never leaves uniform, so the vector math
    // can be skipped; charging and measuring are unchanged.
    const bool degenerate = marked.empty();

    AmplitudeState state(n);
    const std::uint64_t start = oracle.charged();
    double bound = 1.0;
    while (oracle.charged() - start < budget) {
        const std::uint64_t remaining = budget - (oracle.charged() - start);
        if (remaining < 1) break;
        std::uint64_t r = rng.uniform_u64(static_cast<std::uint64_t>(std::ceil(bound)));
        if (r > remaining - 1) r = remaining - 1;  // keep one query for verification

        std::size_t outcome;
        if (degenerate) {
            if (r > 0) oracle.charge(r);
            outcome = 1 + static_cast<std::size_t>(rng.uniform_u64(n));
        } else {
            state.reset_uniform();
            for (std::uint64_t i = 0; i < r; ++i) {
                grover_iterate(state, marked);
                oracle.charge(1);
            }
            outcome = state.measure(rng);
        }
        if (oracle.evaluate(outcome)) return outcome;
        bound = std::min(bound * 2.0, static_cast<double>(root));
    }
    return std::nullopt;
}

}  // namespace qrag
