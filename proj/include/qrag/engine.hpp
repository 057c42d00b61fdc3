#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qrag/instance.hpp"
#include "qrag/ledger.hpp"
#include "qrag/player.hpp"
#include "qrag/rng.hpp"
#include "qrag/util.hpp"

namespace qrag {

/// A player action that breaks the game rules. Fatal for the run.
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Buffer capacity K and demand period R. The adversary demands the next R
/// outputs after every R player rounds. R <= K is the standard regime;
/// anything else must be requested explicitly.
struct GameConfig {
    std::size_t buffer_size = 1;    // K >= 1
    std::size_t demand_period = 1;  // R >= 1
    bool allow_period_over_buffer = false;

    void validate() const {
        if (buffer_size == 0) throw std::invalid_argument("GameConfig: K must be positive");
        if (demand_period == 0) throw std::invalid_argument("GameConfig: R must be positive");
        if (demand_period > buffer_size && !allow_period_over_buffer)
            throw std::invalid_argument(
                "GameConfig: R > K requires allow_period_over_buffer");
    }
};

// ---- transcript -------------------------------------------------------------

struct LoadBlockEvent {
    std::size_t block_index;  // 0-based
    friend bool operator==(const LoadBlockEvent&, const LoadBlockEvent&) = default;
};
struct BufferQueryEvent {
    std::size_t position;  // 1..K
    Bit value;
    friend bool operator==(const BufferQueryEvent&, const BufferQueryEvent&) = default;
};
struct PassEvent {
    friend bool operator==(const PassEvent&, const PassEvent&) = default;
};
using RoundEvent = std::variant<LoadBlockEvent, BufferQueryEvent, PassEvent>;

struct DemandRecord {
    std::uint64_t round;       // the round count at which this demand was due
    std::size_t output_index;  // 1..n
    KeywordIndex answer;
    friend bool operator==(const DemandRecord&, const DemandRecord&) = default;
};

/// Everything observable about one run. Events and demands are only populated
/// when recording is on; the counters and the cost report are always exact.
struct Transcript {
    std::vector<RoundEvent> events;
    std::vector<DemandRecord> demands;
    bool recorded = false;
};

/// How many outputs have been demanded after `rounds` player rounds.
inline std::size_t demanded_count(std::uint64_t rounds, std::size_t demand_period,
                                  std::size_t n) {
    const std::uint64_t due = demand_period * (rounds / demand_period);
    return due >= n ? n : static_cast<std::size_t>(due);
}

inline Ratio competitive_ratio(std::uint64_t cost, std::uint64_t opt_cost) {
    if (opt_cost == 0) throw std::invalid_argument("competitive_ratio: opt must be positive");
    return Ratio(static_cast<std::int64_t>(cost), static_cast<std::int64_t>(opt_cost));
}

struct CostReport {
    std::uint64_t cost = 0;      // 1 + wrong_significant
    std::uint64_t opt_cost = 1;  // the offline player is always right
    Ratio ratio{0, 1};
    std::uint64_t wrong_significant = 0;  // 0..m
    std::uint64_t total_rounds = 0;
    QueryLedger ledger;
    KeywordIndex optimum = 1;       // the answer being scored against
    KeywordIndex final_answer = 1;  // player's answer once the game ended
    bool final_correct = false;
};

struct GameResult {
    Transcript transcript;
    CostReport report;
};

struct RunOptions {
    bool record_transcript = true;
};

namespace detail {

// thrown (and caught inside run_game) to unwind a player that is still
// mid-play when the last output is demanded
struct GameComplete {};

class Session final : public GameIo {
public:
    Session(const Instance& inst, const GameConfig& cfg, OnlinePlayer& player,
            std::uint64_t seed, bool record, bool serve_demands)
        : inst_(inst),
          cfg_(cfg),
          player_(player),
          rng_(seed),
          record_(record),
          serve_demands_(serve_demands),
          n_(inst.n()),
          optimum_(offline_optimum(inst)) {}

    // -- GameIo ---------------------------------------------------------------
    void load_next_block() override {
        const std::size_t base = blocks_loaded_ * cfg_.buffer_size;
        if (base >= n_)
            throw ProtocolError("LoadBlock past end of input (block " +
                                std::to_string(blocks_loaded_) + ")");
        block_base_ = base;
        block_size_ = std::min(cfg_.buffer_size, n_ - base);
        ++blocks_loaded_;
        ledger_.count_load();
        if (record_) transcript_.events.push_back(LoadBlockEvent{blocks_loaded_ - 1});
        serve_due();
    }

    Bit query(std::size_t pos) override {
        check_position(pos);
        const Bit v = inst_.input_bit(block_base_ + pos);
        ledger_.count_queries(1);
        if (record_) transcript_.events.push_back(BufferQueryEvent{pos, v});
        serve_due();
        return v;
    }

    void pass() override {
        ledger_.count_passes(1);
        if (record_) transcript_.events.push_back(PassEvent{});
        serve_due();
    }

    void charge_queries(std::size_t count, std::size_t pos_hint) override {
        if (count == 0) return;
        check_position(pos_hint);
        const Bit v = inst_.input_bit(block_base_ + pos_hint);
        ledger_.count_queries(count);
        if (record_)
            transcript_.events.insert(transcript_.events.end(), count,
                                      BufferQueryEvent{pos_hint, v});
        serve_due();
    }

    std::size_t block_size() const override { return block_size_; }
    std::size_t block_capacity() const override { return cfg_.buffer_size; }
    std::size_t blocks_loaded() const override { return blocks_loaded_; }
    bool input_exhausted() const override { return blocks_loaded_ * cfg_.buffer_size >= n_; }

    Bit peek(std::size_t pos) const override {
        check_position(pos);
        return inst_.input_bit(block_base_ + pos);
    }

    const Bit* peek_span(std::size_t first, std::size_t len) const override {
        if (len == 0 || first == 0 || first + len - 1 > block_size_) return nullptr;
        return inst_.contiguous_bits(block_base_ + first, len);
    }

    QueryLedger& ledger() override { return ledger_; }
    Rng& rng() override { return rng_; }

    // -- engine side ----------------------------------------------------------
    bool complete() const { return served_ == n_; }
    std::uint64_t rounds() const { return ledger_.total_rounds(); }

    /// Runs the player and pads with passes until all n outputs are demanded.
    void run_to_completion() {
        cut_on_complete_ = true;
        try {
            player_.play(*this);
        } catch (const GameComplete&) {
        }
        cut_on_complete_ = false;
        while (serve_demands_ && !complete()) {
            if (record_) {
                pass();
            } else {
                // the tail is pure passing; take it in one arithmetic step
                const std::uint64_t due_round =
                    ((served_ / cfg_.demand_period) + 1) * cfg_.demand_period;
                const std::uint64_t gap = due_round - rounds();
                ledger_.count_passes(gap);
                serve_due();
            }
        }
    }

    GameResult finish() {
        CostReport report;
        report.wrong_significant = wrong_significant_;
        report.cost = 1 + wrong_significant_;
        report.opt_cost = 1;
        report.ratio = competitive_ratio(report.cost, report.opt_cost);
        report.total_rounds = ledger_.total_rounds();
        report.ledger = ledger_;
        report.optimum = optimum_;
        report.final_answer = player_.current_answer(n_);
        report.final_correct = report.final_answer == optimum_;
        transcript_.recorded = record_;
        return GameResult{std::move(transcript_), std::move(report)};
    }

private:
    void check_position(std::size_t pos) const {
        if (pos < 1 || pos > block_size_)
            throw ProtocolError("BufferQuery position " + std::to_string(pos) +
                                " outside resident block of size " +
                                std::to_string(block_size_));
    }

    /// Serves every demand batch that the round count has made due. Demands
    /// interrupt the player mid-action by design: answers reflect its state
    /// at demand time.
    void serve_due() {
        if (!serve_demands_) return;
        const std::uint64_t r = rounds();
        while (served_ < n_) {
            const std::uint64_t batch = served_ / cfg_.demand_period + 1;
            const std::uint64_t due_round = batch * cfg_.demand_period;
            if (due_round > r) break;
            const std::size_t upto =
                std::min<std::uint64_t>(n_, batch * cfg_.demand_period);
            serve_batch(due_round, upto);
        }
        if (cut_on_complete_ && served_ == n_) throw GameComplete{};
    }

    void serve_batch(std::uint64_t due_round, std::size_t upto) {
        if (record_) {
            for (std::size_t idx = served_ + 1; idx <= upto; ++idx) {
                const KeywordIndex ans = player_.current_answer(idx);
                transcript_.demands.push_back(DemandRecord{due_round, idx, ans});
                score(idx, ans);
            }
        } else {
            // only significant outputs (positions (j+d)*k) influence the cost;
            // skip the rest of the batch arithmetically
            const std::size_t k = inst_.k();
            std::size_t idx = ((served_ / k) + 1) * k;  // first multiple of k past served_
            for (; idx <= upto; idx += k)
                if (idx / k > inst_.d()) score(idx, player_.current_answer(idx));
        }
        served_ = upto;
    }

    void score(std::size_t output_index, KeywordIndex answer) {
        if (output_index % inst_.k() != 0) return;
        const std::size_t q = output_index / inst_.k();
        if (q <= inst_.d() || q > inst_.d() + inst_.m()) return;
        if (answer != optimum_) ++wrong_significant_;
    }

    const Instance& inst_;
    const GameConfig& cfg_;
    OnlinePlayer& player_;
    Rng rng_;
    const bool record_;
    const bool serve_demands_;
    const std::size_t n_;
    const KeywordIndex optimum_;

    QueryLedger ledger_;
    Transcript transcript_;
    std::size_t blocks_loaded_ = 0;
    std::size_t block_base_ = 0;  // global position preceding the block
    std::size_t block_size_ = 0;
    std::size_t served_ = 0;
    std::uint64_t wrong_significant_ = 0;
    bool cut_on_complete_ = false;
};

}  // namespace detail

/// Plays one full game: the player acts; after every R of its rounds the next
/// R outputs are demanded and answered with its current answers; the game ends
/// the moment all n outputs have been demanded, cutting the player off if it
/// is still busy. Deterministic in (player, instance, config, seed).
inline GameResult run_game(OnlinePlayer& player, const Instance& inst, const GameConfig& cfg,
                           std::uint64_t seed, const RunOptions& options = {}) {
    cfg.validate();
    detail::Session session(inst, cfg, player, seed, options.record_transcript,
                            /*serve_demands=*/true);
    session.run_to_completion();
    return session.finish();
}

struct FreeRunResult {
    QueryLedger ledger;
    std::uint64_t total_rounds = 0;
};

/// Test harness: drives play() to completion with the demand schedule turned
/// off, so a player's finished state can be inspected. Not a game; no costs.
inline FreeRunResult run_free(OnlinePlayer& player, const Instance& inst, std::size_t buffer_size,
                              std::uint64_t seed) {
    GameConfig cfg{buffer_size, buffer_size, false};
    cfg.validate();
    detail::Session session(inst, cfg, player, seed, /*record=*/false,
                            /*serve_demands=*/false);
    player.play(session);
    return FreeRunResult{session.ledger(), session.rounds()};
}

}  // namespace qrag
