#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "qrag/accessor.hpp"
#include "qrag/bitstring.hpp"
#include "qrag/compare.hpp"
#include "qrag/first_one.hpp"
#include "qrag/keyword_tree.hpp"
#include "qrag/ledger.hpp"
#include "qrag/player.hpp"

namespace qrag {

struct PlayerConfig {
    BackendConfig backend;
    TrackerMode tracker = TrackerMode::faithful;
    /// Repetitions per string comparison; defaults to compare_repetitions(m).
    std::optional<std::size_t> boost_override;
};

namespace detail {

/// Cursor over the flat input layout: string s (1-based, keywords first)
/// spans positions (s-1)*k+1 .. s*k. Blocks hold whole strings because the
/// players insist on a buffer capacity that is a multiple of k.
class StringCursor {
public:
    StringCursor(GameIo& io, std::size_t k) : io_(io), k_(k) {
        const std::size_t cap = io.block_capacity();
        if (cap < k || cap % k != 0)
            throw std::invalid_argument(
                "player requires buffer capacity K to be a positive multiple of the "
                "string length k (got K=" +
                std::to_string(cap) + ", k=" + std::to_string(k) + ")");
        per_block_ = cap / k;
    }

    /// Loads forward until string s is buffered; returns its offset within
    /// the buffer, ready for 1-based addressing as offset + 1..k.
    std::size_t seek(std::size_t s) {
        const std::size_t block = (s - 1) / per_block_;
        while (io_.blocks_loaded() <= block) io_.load_next_block();
        return ((s - 1) % per_block_) * k_;
    }

private:
    GameIo& io_;
    std::size_t k_;
    std::size_t per_block_;
};

}  // namespace detail

/// Builds the keyword tree from the first d strings, then streams the m words
/// through it, comparing with the boosted quantum routine and counting hits.
/// The answer it stands by at any moment is the most frequent keyword seen so
/// far; every demanded output gets that index.
class QuantumPlayer final : public OnlinePlayer {
public:
    QuantumPlayer(std::size_t d, std::size_t m, std::size_t k, PlayerConfig config = {})
        : d_(d), m_(m), k_(k), config_(config) {
        config_.backend.validate();
    }

    void play(GameIo& io) override {
        tree_ = KeywordTree{};
        tracker_ = MaxTracker{};
        detail::StringCursor cursor(io, k_);
        const std::size_t reps =
            config_.boost_override ? *config_.boost_override : compare_repetitions(m_);

        for (std::size_t i = 1; i <= d_; ++i) {
            const std::size_t offset = cursor.seek(i);
            BitString key;
            for (std::size_t b = 1; b <= k_; ++b) key.push_back(io.query(offset + b));
            tree_.add(i, std::move(key));
        }

        io.ledger().set_phase(Phase::word);
        for (std::size_t j = 1; j <= m_; ++j) {
            const std::size_t offset = cursor.seek(d_ + j);
            BufferAccessor word(io, offset, k_);
            KeywordTree::Node* hit = tree_.find_with([&](const KeywordTree::Node& n) {
                MemoryAccessor key(n.key);
                return quantum_compare_with_reps(word, key, reps, config_.backend,
                                                 io.rng());
            });
            if (hit) bump_count(*hit, tracker_, config_.tracker);
        }
    }

    KeywordIndex current_answer(std::size_t) const override { return tracker_.i_max; }

    const KeywordTree& tree() const { return tree_; }
    const MaxTracker& tracker() const { return tracker_; }

private:
    std::size_t d_, m_, k_;
    PlayerConfig config_;
    KeywordTree tree_;
    MaxTracker tracker_;
};

/// Same tree-and-counts routine with every string read out in full and
/// compared exactly in memory. Never errs; pays k reads per word where the
/// quantum player pays O(sqrt(k) log m).
class ClassicalPlayer final : public OnlinePlayer {
public:
    ClassicalPlayer(std::size_t d, std::size_t m, std::size_t k,
                    TrackerMode tracker = TrackerMode::faithful)
        : d_(d), m_(m), k_(k), mode_(tracker) {}

    void play(GameIo& io) override {
        tree_ = KeywordTree{};
        tracker_ = MaxTracker{};
        detail::StringCursor cursor(io, k_);

        for (std::size_t i = 1; i <= d_; ++i) {
            const std::size_t offset = cursor.seek(i);
            BitString key;
            for (std::size_t b = 1; b <= k_; ++b) key.push_back(io.query(offset + b));
            tree_.add(i, std::move(key));
        }

        io.ledger().set_phase(Phase::word);
        for (std::size_t j = 1; j <= m_; ++j) {
            const std::size_t offset = cursor.seek(d_ + j);
            BitString word;
            for (std::size_t b = 1; b <= k_; ++b) word.push_back(io.query(offset + b));
            KeywordTree::Node* hit = tree_.find_exact(word);
            if (hit) bump_count(*hit, tracker_, mode_);
        }
    }

    KeywordIndex current_answer(std::size_t) const override { return tracker_.i_max; }

    const KeywordTree& tree() const { return tree_; }
    const MaxTracker& tracker() const { return tracker_; }

private:
    std::size_t d_, m_, k_;
    TrackerMode mode_;
    KeywordTree tree_;
    MaxTracker tracker_;
};

/// Answers a fixed keyword index for every output and never touches the
/// input. Handed the offline optimum it is the benchmark player; handed
/// anything else it prices a constant guess.
class FixedAnswerPlayer final : public OnlinePlayer {
public:
    explicit FixedAnswerPlayer(KeywordIndex answer) : answer_(answer) {}

    void play(GameIo&) override {}

    KeywordIndex current_answer(std::size_t) const override { return answer_; }

private:
    KeywordIndex answer_;
};

}  // namespace qrag
