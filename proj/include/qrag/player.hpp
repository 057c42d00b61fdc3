#pragma once

#include <cstdint>

#include "qrag/bitstring.hpp"
#include "qrag/instance.hpp"
#include "qrag/ledger.hpp"
#include "qrag/rng.hpp"

namespace qrag {

/// What a player may do with the game. Each of load_next_block(), query(),
/// pass() and charge_queries() consumes rounds and is one round event apiece
/// (charge_queries: `count` events); everything else is free. The engine may
/// interrupt any round-consuming call to collect due output demands, so the
/// player's current_answer() must be callable at every point in between.
class GameIo {
public:
    virtual ~GameIo() = default;

    // --- round-consuming actions -------------------------------------------
    /// Erase the buffer and load the next block of input variables.
    virtual void load_next_block() = 0;
    /// Read buffer position pos (1..block_size()).
    virtual Bit query(std::size_t pos) = 0;
    /// Do nothing for one round.
    virtual void pass() = 0;
    /// Consume `count` rounds of buffer-query budget at once, on behalf of a
    /// search that touches the whole buffer rather than one address. pos_hint
    /// must be a valid position; it only labels transcript events.
    virtual void charge_queries(std::size_t count, std::size_t pos_hint) = 0;

    // --- free observations --------------------------------------------------
    virtual std::size_t block_size() const = 0;     // 0 before the first load
    virtual std::size_t block_capacity() const = 0; // K
    virtual std::size_t blocks_loaded() const = 0;
    virtual bool input_exhausted() const = 0;
    /// Uncharged read of buffer position pos. Simulation substrate only: the
    /// quantum backends use it to evolve amplitudes / model outcomes. Player
    /// decision logic must go through query().
    virtual Bit peek(std::size_t pos) const = 0;
    /// The underlying bits of buffer positions [first, first+len-1] when they
    /// are contiguous in storage, else nullptr. Free; used by oracle scans.
    virtual const Bit* peek_span(std::size_t first, std::size_t len) const = 0;

    virtual QueryLedger& ledger() = 0;
    virtual Rng& rng() = 0;
};

/// A player. run_game() calls play() once; the player performs its whole
/// input-processing routine through the GameIo handle and returns when it has
/// nothing left to do (the engine then passes on its behalf). play() may be
/// abandoned mid-call when the game completes, so players must not catch
/// exceptions they do not recognize.
class OnlinePlayer {
public:
    virtual ~OnlinePlayer() = default;

    virtual void play(GameIo& io) = 0;

    /// Answer for output variable `output_index` (1..n) as of now. Total:
    /// must return something sensible at any time, including before play().
    virtual KeywordIndex current_answer(std::size_t output_index) const = 0;
};

}  // namespace qrag
