#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "qrag/grover.hpp"
#include "qrag/oracle.hpp"
#include "qrag/rng.hpp"
#include "qrag/util.hpp"

namespace qrag {

enum class BackendKind { exact_amplitude, modeled };

/// How quantum subroutines are realized. The exact backend evolves real
/// amplitudes and actually behaves stochastically; the modeled backend skips
/// the simulation and stands in for it with the contract itself (sqrt cost,
/// one-sided error epsilon), which scales to large inputs.
struct BackendConfig {
    BackendKind kind = BackendKind::modeled;
    /// Modeled miss probability per call. The contract needs <= 1/2.
    double epsilon = 0.5;
    /// Exact backend: hard cap on charged queries per first-one call, as a
    /// multiple of ceil(sqrt(N)). Measured behavior is documented with the
    /// acceptance results; the cap is enforced, not assumed.
    double budget_factor = 10.0;

    static BackendConfig exact(double budget = 10.0) {
        return BackendConfig{BackendKind::exact_amplitude, 0.0, budget};
    }
    static BackendConfig modeled_with(double eps) {
        return BackendConfig{BackendKind::modeled, eps, 10.0};
    }
    void validate() const {
        if (epsilon < 0.0 || epsilon > 1.0)
            throw std::invalid_argument("BackendConfig: epsilon must be in [0, 1]");
        if (budget_factor <= 0.0)
            throw std::invalid_argument("BackendConfig: budget factor must be positive");
    }
};

namespace detail {

// budget shares inside one first-one call: exponentially growing prefixes get
// ceil(1.5 sqrt(P)) + 4 each, the first full-width pass gets the remainder
inline constexpr double kPrefixBudgetScale = 1.5;
inline constexpr std::uint64_t kPrefixBudgetFloor = 4;

inline std::size_t first_one_exact(PredicateOracle& oracle, const BackendConfig& backend,
                                   Rng& rng) {
    const std::size_t n = oracle.arity();
    const std::size_t sentinel = n + 1;
    const std::uint64_t budget = static_cast<std::uint64_t>(
        std::ceil(backend.budget_factor * static_cast<double>(int_sqrt_ceil(n))));
    const std::uint64_t start = oracle.charged();

    std::size_t best = sentinel;
    std::size_t prefix = 1;
    while (oracle.charged() - start < budget) {
        const std::size_t width = std::min(std::min(prefix, n), best - 1);
        if (width == 0) break;
        const bool full_width = prefix >= n;
        const std::uint64_t remaining = budget - (oracle.charged() - start);
        const std::uint64_t share =
            full_width ? remaining
                       : std::min(remaining,
                                  static_cast<std::uint64_t>(std::ceil(
                                      kPrefixBudgetScale *
                                      std::sqrt(static_cast<double>(width)))) +
                                      kPrefixBudgetFloor);

        RestrictedOracle restricted(oracle, width);
        GroverOptions opts;
        opts.max_charged = share;
        const auto found = grover_search(restricted, rng, opts);
        if (found) {
            best = *found;  // < previous best: the range stopped short of it
        } else if (full_width) {
            break;  // a whole-range pass came up empty; stop burning budget
        }
        if (prefix < n) prefix *= 2;
    }
    return best;
}

inline std::size_t first_one_modeled(PredicateOracle& oracle, const BackendConfig& backend,
                                     Rng& rng) {
    const std::size_t n = oracle.arity();
    const std::size_t sentinel = n + 1;
    // the true answer, found with free reads; the contract's cost is booked
    // as one lump charge
    const std::size_t truth = oracle.first_marked_at_or_after(1);
    oracle.charge(int_sqrt_ceil(n));
    if (truth >= sentinel) return sentinel;
    if (rng.uniform_double() < 1.0 - backend.epsilon) return truth;
    // miss: a uniformly random marked position after the first, if any
    const std::size_t later = oracle.count_marked_in(truth + 1, n);
    if (later == 0) return sentinel;
    const std::size_t nth = 1 + static_cast<std::size_t>(rng.uniform_u64(later));
    return oracle.nth_marked_in(truth + 1, n, nth);
}

}  // namespace detail

/// Finds the smallest marked position of the oracle, n+1 if none (or on a
/// miss with nothing marked afterwards). Succeeds with probability >= 1/2
/// within O(sqrt(n)) charged queries; never returns an unmarked position
/// below the sentinel.
inline std::size_t first_one_search(PredicateOracle& oracle, const BackendConfig& backend,
                                    Rng& rng) {
    backend.validate();
    if (oracle.arity() == 0) throw std::invalid_argument("first_one_search: empty range");
    return backend.kind == BackendKind::exact_amplitude
               ? detail::first_one_exact(oracle, backend, rng)
               : detail::first_one_modeled(oracle, backend, rng);
}

}  // namespace qrag
