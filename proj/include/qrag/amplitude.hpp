#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qrag/oracle.hpp"
#include "qrag/rng.hpp"

namespace qrag {

/// Real amplitude vector over search positions 1..N. Grover dynamics with a
/// real start state and a phase oracle stay real, so no complex numbers are
/// needed. Both unitaries preserve the Euclidean norm up to rounding; callers
/// may assert norm() == 1 within 1e-9 after every iteration.
class AmplitudeState {
public:
    explicit AmplitudeState(std::size_t n) : amp_(n, 0.0) {
        if (n == 0) throw std::invalid_argument("AmplitudeState: empty register");
        reset_uniform();
    }

    std::size_t size() const { return amp_.size(); }

    void reset_uniform() {
        const double a = 1.0 / std::sqrt(static_cast<double>(amp_.size()));
        for (double& x : amp_) x = a;
    }

    double amplitude(std::size_t pos) const { return amp_[pos - 1]; }  // 1-based

    double norm() const {
        double s = 0.0;
        for (double x : amp_) s += x * x;
        return std::sqrt(s);
    }

    /// Phase oracle: negate the amplitude of every marked position.
    void apply_phase(const std::vector<std::size_t>& marked) {
        for (std::size_t pos : marked) amp_[pos - 1] = -amp_[pos - 1];
    }

    /// Inversion about the mean.
    void apply_diffusion() {
        double mean = 0.0;
        for (double x : amp_) mean += x;
        mean /= static_cast<double>(amp_.size());
        for (double& x : amp_) x = 2.0 * mean - x;
    }

    /// Total probability mass on the marked positions.
    double marked_probability(const std::vector<std::size_t>& marked) const {
        double p = 0.0;
        for (std::size_t pos : marked) p += amp_[pos - 1] * amp_[pos - 1];
        return p;
    }

    /// Measure in the computational basis: position with probability
    /// amplitude^2 (renormalized against rounding drift).
    std::size_t measure(Rng& rng) const {
        double total = 0.0;
        for (double x : amp_) total += x * x;
        const double u = rng.uniform_double() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < amp_.size(); ++i) {
            acc += amp_[i] * amp_[i];
            if (u < acc) return i + 1;
        }
        return amp_.size();
    }

private:
    std::vector<double> amp_;
};

/// One Grover iteration (phase oracle then diffusion).
inline void grover_iterate(AmplitudeState& state, const std::vector<std::size_t>& marked) {
    state.apply_phase(marked);
    state.apply_diffusion();
}

/// The marked positions of an oracle, collected with free reads. The exact
/// backend evolves amplitudes from this; the reads are simulation substrate,
/// not queries.
inline std::vector<std::size_t> collect_marked(const PredicateOracle& oracle) {
    std::vector<std::size_t> marked;
    std::size_t j = oracle.first_marked_at_or_after(1);
    while (j <= oracle.arity()) {
        marked.push_back(j);
        j = oracle.first_marked_at_or_after(j + 1);
    }
    return marked;
}

}  // namespace qrag
