#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>

#include "qrag/bitstring.hpp"
#include "qrag/ledger.hpp"

namespace qrag {

/// A 0/1 predicate over positions 1..N, with an attached charging policy.
/// Two charged paths exist: evaluate(pos) is a genuine addressed query
/// (read_charged does the real, possibly round-consuming read), and
/// charge(count) books query budget without naming positions (iteration
/// charges, modeled lump charges; routed through on_charge). peek() and the
/// scan helpers are free simulation substrate. The predicate must stay fixed
/// for the oracle's lifetime.
class PredicateOracle {
public:
    explicit PredicateOracle(std::size_t arity) : arity_(arity) {}
    virtual ~PredicateOracle() = default;

    std::size_t arity() const { return arity_; }

    Bit evaluate(std::size_t pos) {
        ++charged_;
        return read_charged(pos);
    }

    Bit peek(std::size_t pos) const { return read(pos); }

    void charge(std::size_t count) {
        charged_ += count;
        on_charge(count);
    }

    /// Charged queries made through this oracle so far.
    std::uint64_t charged() const { return charged_; }

    // --- free scans (overridable for speed; semantics fixed by read()) ------
    /// Smallest marked position >= from; arity()+1 if none.
    virtual std::size_t first_marked_at_or_after(std::size_t from) const {
        for (std::size_t j = from; j <= arity_; ++j)
            if (read(j)) return j;
        return arity_ + 1;
    }
    /// Number of marked positions in [lo, hi] (clamped to the arity).
    virtual std::size_t count_marked_in(std::size_t lo, std::size_t hi) const {
        std::size_t c = 0;
        for (std::size_t j = lo; j <= hi && j <= arity_; ++j)
            if (read(j)) ++c;
        return c;
    }
    /// The nth (1-based) marked position in [lo, hi]; arity()+1 if fewer.
    virtual std::size_t nth_marked_in(std::size_t lo, std::size_t hi, std::size_t nth) const {
        std::size_t c = 0;
        for (std::size_t j = lo; j <= hi && j <= arity_; ++j)
            if (read(j) && ++c == nth) return j;
        return arity_ + 1;
    }

protected:
    virtual Bit read(std::size_t pos) const = 0;
    /// The real read behind evaluate(); the query has already been counted
    /// against this oracle when it runs.
    virtual Bit read_charged(std::size_t pos) { return read(pos); }
    virtual void on_charge(std::size_t) {}

private:
    std::size_t arity_;
    std::uint64_t charged_ = 0;
};

/// Predicate given by a callable; charges go to an optional ledger. The
/// standalone workhorse for search tests.
class FunctionOracle final : public PredicateOracle {
public:
    FunctionOracle(std::size_t arity, std::function<Bit(std::size_t)> fn,
                   QueryLedger* ledger = nullptr)
        : PredicateOracle(arity), fn_(std::move(fn)), ledger_(ledger) {}

protected:
    Bit read(std::size_t pos) const override { return fn_(pos) ? 1 : 0; }
    Bit read_charged(std::size_t pos) override {
        if (ledger_) ledger_->count_queries(1);
        return read(pos);
    }
    void on_charge(std::size_t count) override {
        if (ledger_) ledger_->count_queries(count);
    }

private:
    std::function<Bit(std::size_t)> fn_;
    QueryLedger* ledger_;
};

/// The same predicate restricted to positions 1..arity (a prefix). Every
/// charged use is forwarded, so the parent's totals keep counting.
class RestrictedOracle final : public PredicateOracle {
public:
    RestrictedOracle(PredicateOracle& parent, std::size_t arity)
        : PredicateOracle(arity), parent_(parent) {}

    std::size_t first_marked_at_or_after(std::size_t from) const override {
        const std::size_t j = parent_.first_marked_at_or_after(from);
        return j <= arity() ? j : arity() + 1;
    }
    std::size_t count_marked_in(std::size_t lo, std::size_t hi) const override {
        return parent_.count_marked_in(lo, std::min(hi, arity()));
    }
    std::size_t nth_marked_in(std::size_t lo, std::size_t hi, std::size_t nth) const override {
        const std::size_t j = parent_.nth_marked_in(lo, std::min(hi, arity()), nth);
        return j <= arity() ? j : arity() + 1;
    }

protected:
    Bit read(std::size_t pos) const override { return parent_.peek(pos); }
    Bit read_charged(std::size_t pos) override { return parent_.evaluate(pos); }
    void on_charge(std::size_t count) override { parent_.charge(count); }

private:
    PredicateOracle& parent_;
};

}  // namespace qrag
