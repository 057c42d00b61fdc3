#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrag/engine.hpp"
#include "qrag/instance.hpp"
#include "qrag/players.hpp"
#include "qrag/report.hpp"

namespace qrag {

enum class PlayerKind { quantum, classical, oracle, constant };

inline const char* to_string(PlayerKind kind) {
    switch (kind) {
        case PlayerKind::quantum: return "quantum";
        case PlayerKind::classical: return "classical";
        case PlayerKind::oracle: return "oracle";
        case PlayerKind::constant: return "constant";
    }
    throw std::logic_error("unreachable");
}

inline PlayerKind parse_player_kind(const std::string& name) {
    if (name == "quantum") return PlayerKind::quantum;
    if (name == "classical") return PlayerKind::classical;
    if (name == "oracle") return PlayerKind::oracle;
    if (name == "constant") return PlayerKind::constant;
    throw std::invalid_argument("unknown player: " + name);
}

/// Instantiates a player for one instance. The oracle player is handed the
/// offline optimum; the constant player answers `constant_index` regardless.
inline std::unique_ptr<OnlinePlayer> make_player(PlayerKind kind, const Instance& inst,
                                                 const PlayerConfig& config,
                                                 KeywordIndex constant_index = 1) {
    switch (kind) {
        case PlayerKind::quantum:
            return std::make_unique<QuantumPlayer>(inst.d(), inst.m(), inst.k(), config);
        case PlayerKind::classical:
            return std::make_unique<ClassicalPlayer>(inst.d(), inst.m(), inst.k(),
                                                     config.tracker);
        case PlayerKind::oracle:
            return std::make_unique<FixedAnswerPlayer>(offline_optimum(inst));
        case PlayerKind::constant:
            return std::make_unique<FixedAnswerPlayer>(constant_index);
    }
    throw std::logic_error("unreachable");
}

/// One seeded game. Trial i of a batch runs with seed base_seed + i, so a
/// batch is reproducible from its base seed and any single trial can be
/// replayed in isolation.
inline TrialResult run_single_trial(PlayerKind kind, const Instance& inst,
                                    const GameConfig& game, const PlayerConfig& config,
                                    std::uint64_t base_seed, std::size_t trial_index,
                                    KeywordIndex constant_index = 1) {
    const std::uint64_t seed = base_seed + trial_index;
    std::unique_ptr<OnlinePlayer> player = make_player(kind, inst, config, constant_index);
    RunOptions options;
    options.record_transcript = false;
    GameResult game_result = run_game(*player, inst, game, seed, options);
    TrialResult out;
    out.trial = trial_index;
    out.seed = seed;
    out.report = std::move(game_result.report);
    return out;
}

inline std::vector<TrialResult> run_trials(PlayerKind kind, const Instance& inst,
                                           const GameConfig& game,
                                           const PlayerConfig& config,
                                           std::uint64_t base_seed, std::size_t trials,
                                           KeywordIndex constant_index = 1) {
    if (trials == 0) throw std::invalid_argument("run_trials: trials must be positive");
    std::vector<TrialResult> results;
    results.reserve(trials);
    for (std::size_t i = 0; i < trials; ++i)
        results.push_back(
            run_single_trial(kind, inst, game, config, base_seed, i, constant_index));
    return results;
}

}  // namespace qrag
