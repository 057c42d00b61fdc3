#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>

#include "qrag/accessor.hpp"
#include "qrag/first_one.hpp"
#include "qrag/oracle.hpp"
#include "qrag/rng.hpp"
#include "qrag/util.hpp"

namespace qrag {

enum class CompareOutcome : int { less = -1, equal = 0, greater = 1 };

inline int to_int(CompareOutcome o) { return static_cast<int>(o); }

/// The mismatch predicate f(j) = (s_j != t_j) over j = 1..min(|s|,|t|), as an
/// oracle. An addressed evaluation reads both strings at their true positions
/// (each side charging per its policy); lump charges book one read per side
/// per query. The free-scan overrides work on the underlying bytes and cache
/// the first mismatch, since a boosted compare scans the same fixed pair many
/// times.
class DiffOracle final : public PredicateOracle {
public:
    DiffOracle(StringAccessor& s, StringAccessor& t)
        : PredicateOracle(std::min(s.length(), t.length())), s_(s), t_(t) {}

    std::size_t first_marked_at_or_after(std::size_t from) const override {
        if (from <= 1) {
            if (!first_diff_) first_diff_ = scan_first(1);
            return *first_diff_;
        }
        return scan_first(from);
    }

    std::size_t count_marked_in(std::size_t lo, std::size_t hi) const override {
        hi = std::min(hi, arity());
        if (lo > hi) return 0;
        const Bit* a = s_.span();
        const Bit* b = t_.span();
        if (!a || !b) return PredicateOracle::count_marked_in(lo, hi);
        std::size_t c = 0;
        for (std::size_t j = lo; j <= hi; ++j) c += a[j - 1] != b[j - 1];
        return c;
    }

    std::size_t nth_marked_in(std::size_t lo, std::size_t hi, std::size_t nth) const override {
        hi = std::min(hi, arity());
        const Bit* a = s_.span();
        const Bit* b = t_.span();
        if (!a || !b) return PredicateOracle::nth_marked_in(lo, hi, nth);
        std::size_t c = 0;
        for (std::size_t j = lo; j <= hi; ++j)
            if (a[j - 1] != b[j - 1] && ++c == nth) return j;
        return arity() + 1;
    }

protected:
    Bit read(std::size_t pos) const override { return s_.peek(pos) != t_.peek(pos) ? 1 : 0; }
    Bit read_charged(std::size_t pos) override { return s_.at(pos) != t_.at(pos) ? 1 : 0; }
    void on_charge(std::size_t count) override {
        s_.charge(count);
        t_.charge(count);
    }

private:
    std::size_t scan_first(std::size_t from) const {
        const Bit* a = s_.span();
        const Bit* b = t_.span();
        if (!a || !b) return PredicateOracle::first_marked_at_or_after(from);
        const std::size_t n = arity();
        for (std::size_t j = from; j <= n; ++j)
            if (a[j - 1] != b[j - 1]) return j;
        return n + 1;
    }

    StringAccessor& s_;
    StringAccessor& t_;
    mutable std::optional<std::size_t> first_diff_;
};

/// Repetitions of the first-mismatch search inside one compare: one initial
/// call plus a boosting loop of max(1, 3*ceil(log2 m)).
inline std::size_t compare_repetitions(std::size_t m) {
    return std::max<std::size_t>(1, 3 * ceil_log2(std::max<std::size_t>(m, 1))) + 1;
}

namespace detail {
inline CompareOutcome outcome_from_lengths(std::size_t ls, std::size_t lt) {
    if (ls < lt) return CompareOutcome::less;
    if (ls > lt) return CompareOutcome::greater;
    return CompareOutcome::equal;
}
}  // namespace detail

/// Dictionary-order compare of s against t driven by repeated quantum
/// first-mismatch searches. Every candidate, the initial call's included, is
/// validated with charged reads of both strings before it may become the
/// mismatch position; the smallest validated candidate decides the order, and
/// an all-sentinel run falls back to the length rule. `reps` boosts the
/// per-call error 1/2 down to (1/2)^reps.
inline CompareOutcome quantum_compare_with_reps(StringAccessor& s, StringAccessor& t,
                                                std::size_t reps, const BackendConfig& backend,
                                                Rng& rng) {
    if (s.length() == 0 || t.length() == 0)
        throw std::invalid_argument("quantum_compare: strings must be nonempty");
    if (reps == 0) throw std::invalid_argument("quantum_compare: need at least one repetition");
    DiffOracle oracle(s, t);
    const std::size_t n = oracle.arity();

    std::size_t best = n + 1;
    Bit best_s = 0, best_t = 0;
    for (std::size_t rep = 0; rep < reps; ++rep) {
        const std::size_t candidate = first_one_search(oracle, backend, rng);
        if (candidate > n) continue;
        const Bit sb = s.at(candidate);
        const Bit tb = t.at(candidate);
        if (sb != tb && candidate < best) {
            best = candidate;
            best_s = sb;
            best_t = tb;
        }
    }
    if (best > n) return detail::outcome_from_lengths(s.length(), t.length());
    return best_s < best_t ? CompareOutcome::less : CompareOutcome::greater;
}

/// As above with the repetition count derived from the word count m.
inline CompareOutcome quantum_compare(StringAccessor& s, StringAccessor& t, std::size_t m,
                                      const BackendConfig& backend, Rng& rng) {
    return quantum_compare_with_reps(s, t, compare_repetitions(m), backend, rng);
}

/// Plain left-to-right compare; the exact reference. Reads every position up
/// to the first mismatch through the charged path.
inline CompareOutcome classical_compare(StringAccessor& s, StringAccessor& t) {
    const std::size_t n = std::min(s.length(), t.length());
    for (std::size_t j = 1; j <= n; ++j) {
        const Bit sb = s.at(j);
        const Bit tb = t.at(j);
        if (sb != tb) return sb < tb ? CompareOutcome::less : CompareOutcome::greater;
    }
    return detail::outcome_from_lengths(s.length(), t.length());
}

/// Exact compare of in-memory strings (free), for reference checks.
inline CompareOutcome exact_compare(const BitString& a, const BitString& b) {
    if (a == b) return CompareOutcome::equal;
    return a < b ? CompareOutcome::less : CompareOutcome::greater;
}

}  // namespace qrag
