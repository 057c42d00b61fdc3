#pragma once

#include <cstdint>

#include "qrag/bitstring.hpp"
#include "qrag/ledger.hpp"
#include "qrag/player.hpp"

namespace qrag {

/// Read access to one binary string, with a charging policy baked in. at() is
/// a real read (buffer-backed: consumes a round per symbol; memory-backed:
/// free). peek() never charges; charge() books reads in bulk on behalf of a
/// search. span() exposes the underlying bytes for free scans when the string
/// is contiguous in storage, else nullptr.
class StringAccessor {
public:
    virtual ~StringAccessor() = default;
    virtual std::size_t length() const = 0;
    virtual Bit at(std::size_t pos) = 0;  // 1-based
    virtual Bit peek(std::size_t pos) const = 0;
    virtual void charge(std::size_t reads) = 0;
    virtual const Bit* span() const { return nullptr; }
};

/// A string the player holds in private memory. All access is free.
class MemoryAccessor final : public StringAccessor {
public:
    explicit MemoryAccessor(const BitString& s) : s_(s) {}
    std::size_t length() const override { return s_.size(); }
    Bit at(std::size_t pos) override { return s_.bit(pos - 1); }
    Bit peek(std::size_t pos) const override { return s_.bit(pos - 1); }
    void charge(std::size_t) override {}
    const Bit* span() const override { return s_.data(); }

private:
    const BitString& s_;
};

/// A word resident in the game buffer: a window of `len` positions starting
/// after `offset`. Reads go through the session and cost rounds.
class BufferAccessor final : public StringAccessor {
public:
    BufferAccessor(GameIo& io, std::size_t offset, std::size_t len)
        : io_(io), offset_(offset), len_(len) {}
    std::size_t length() const override { return len_; }
    Bit at(std::size_t pos) override { return io_.query(offset_ + pos); }
    Bit peek(std::size_t pos) const override { return io_.peek(offset_ + pos); }
    void charge(std::size_t reads) override { io_.charge_queries(reads, offset_ + 1); }
    const Bit* span() const override { return io_.peek_span(offset_ + 1, len_); }

private:
    GameIo& io_;
    std::size_t offset_;
    std::size_t len_;
};

/// Memory-held string whose reads are still counted as queries against a
/// ledger. Lets comparator tests meter charges without a running game.
class LedgerAccessor final : public StringAccessor {
public:
    LedgerAccessor(const BitString& s, QueryLedger& ledger) : s_(s), ledger_(ledger) {}
    std::size_t length() const override { return s_.size(); }
    Bit at(std::size_t pos) override {
        ledger_.count_queries(1);
        return s_.bit(pos - 1);
    }
    Bit peek(std::size_t pos) const override { return s_.bit(pos - 1); }
    void charge(std::size_t reads) override { ledger_.count_queries(reads); }
    const Bit* span() const override { return s_.data(); }

private:
    const BitString& s_;
    QueryLedger& ledger_;
};

}  // namespace qrag
