#pragma once

#include <cstdint>

namespace qrag {

/// Which stage of its input the player is working through. Used only for the
/// ledger breakdown; the engine itself is phase-agnostic.
enum class Phase { keyword = 0, word = 1 };

/// Monotone counters for everything that costs a round: buffer queries, block
/// loads and passes. Player-private computation is free and never shows up
/// here. Copy to snapshot.
class QueryLedger {
public:
    void count_queries(std::uint64_t n = 1) {
        buffer_queries_ += n;
        by_phase_queries_[phase_index()] += n;
    }
    void count_load() {
        ++loads_;
        ++by_phase_loads_[phase_index()];
    }
    void count_passes(std::uint64_t n = 1) {
        passes_ += n;
        by_phase_passes_[phase_index()] += n;
    }

    void set_phase(Phase p) { phase_ = p; }
    Phase phase() const { return phase_; }

    std::uint64_t buffer_queries() const { return buffer_queries_; }
    std::uint64_t loads() const { return loads_; }
    std::uint64_t passes() const { return passes_; }

    std::uint64_t queries_in(Phase p) const { return by_phase_queries_[static_cast<int>(p)]; }
    std::uint64_t loads_in(Phase p) const { return by_phase_loads_[static_cast<int>(p)]; }
    std::uint64_t passes_in(Phase p) const { return by_phase_passes_[static_cast<int>(p)]; }

    /// Rounds consumed so far: by definition the sum of the three counters.
    std::uint64_t total_rounds() const { return buffer_queries_ + loads_ + passes_; }

private:
    int phase_index() const { return static_cast<int>(phase_); }

    std::uint64_t buffer_queries_ = 0;
    std::uint64_t loads_ = 0;
    std::uint64_t passes_ = 0;
    std::uint64_t by_phase_queries_[2] = {0, 0};
    std::uint64_t by_phase_loads_[2] = {0, 0};
    std::uint64_t by_phase_passes_[2] = {0, 0};
    Phase phase_ = Phase::keyword;
};

}  // namespace qrag
