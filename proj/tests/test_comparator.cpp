#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "qrag/accessor.hpp"
#include "qrag/compare.hpp"
#include "qrag/rng.hpp"

using namespace qrag;

namespace {

BitString bs(const std::string& text) { return BitString::from_text(text); }

CompareOutcome modeled_compare(const std::string& a, const std::string& b, double epsilon,
                               std::size_t reps, Rng& rng) {
    const BitString sa = bs(a), sb = bs(b);
    MemoryAccessor ma(sa), mb(sb);
    return quantum_compare_with_reps(ma, mb, reps, BackendConfig::modeled_with(epsilon), rng);
}

std::vector<std::string> all_strings_up_to(std::size_t max_len) {
    std::vector<std::string> out;
    for (std::size_t len = 1; len <= max_len; ++len)
        for (std::uint64_t v = 0; v < (1ull << len); ++v) {
            std::string s;
            for (std::size_t i = 0; i < len; ++i) s.push_back((v >> (len - 1 - i)) & 1 ? '1' : '0');
            out.push_back(std::move(s));
        }
    return out;
}

BitString random_bits(Rng& rng, std::size_t len) {
    BitString s(len);
    for (std::size_t i = 0; i < len; ++i) s.set(i, rng.bit());
    return s;
}

}  // namespace

TEST_CASE("compare_repetitions grows with the word count") {
    CHECK(compare_repetitions(1) == 2);
    CHECK(compare_repetitions(2) == 4);
    CHECK(compare_repetitions(3) == 7);
    CHECK(compare_repetitions(16) == 13);
    CHECK(compare_repetitions(17) == 16);
    CHECK(compare_repetitions(1024) == 31);
}

TEST_CASE("error-free compare orders the pinned examples") {
    Rng rng(3);
    CHECK(modeled_compare("010", "011", 0.0, 2, rng) == CompareOutcome::less);
    CHECK(modeled_compare("011", "010", 0.0, 2, rng) == CompareOutcome::greater);
    CHECK(modeled_compare("011", "011", 0.0, 2, rng) == CompareOutcome::equal);
    CHECK(modeled_compare("01", "011", 0.0, 2, rng) == CompareOutcome::less);
    CHECK(modeled_compare("011", "01", 0.0, 2, rng) == CompareOutcome::greater);
    CHECK(modeled_compare("1", "10", 0.0, 2, rng) == CompareOutcome::less);
}

TEST_CASE("pairs without a mismatch in the shared window never err") {
    // the searches have nothing to find, so even a certain-miss backend gets
    // the length rule right
    Rng rng(5);
    CHECK(modeled_compare("01", "011", 1.0, 3, rng) == CompareOutcome::less);
    CHECK(modeled_compare("0110", "0110", 1.0, 3, rng) == CompareOutcome::equal);
    CHECK(modeled_compare("10", "1", 1.0, 3, rng) == CompareOutcome::greater);
}

TEST_CASE("error-free compare is exhaustively correct on short strings") {
    Rng rng(7);
    const std::vector<std::string> strings = all_strings_up_to(4);
    const BackendConfig backend = BackendConfig::modeled_with(0.0);
    for (const std::string& a : strings)
        for (const std::string& b : strings) {
            const BitString sa = bs(a), sb = bs(b);
            MemoryAccessor ma(sa), mb(sb);
            const CompareOutcome got = quantum_compare_with_reps(ma, mb, 1, backend, rng);
            CHECK(got == exact_compare(sa, sb));
            // dictionary order on bitstrings is string order on their text
            const CompareOutcome want = a < b ? CompareOutcome::less
                                      : a > b ? CompareOutcome::greater
                                              : CompareOutcome::equal;
            CHECK(got == want);
        }
}

TEST_CASE("classical compare reads both sides up to the deciding position") {
    const BitString sa = bs("0101"), sb = bs("0111");
    QueryLedger ledger;
    LedgerAccessor a(sa, ledger), b(sb, ledger);
    CHECK(classical_compare(a, b) == CompareOutcome::less);
    CHECK(ledger.buffer_queries() == 6);  // mismatch at position 3: two reads each

    QueryLedger equal_ledger;
    LedgerAccessor c(sa, equal_ledger), d(sa, equal_ledger);
    CHECK(classical_compare(c, d) == CompareOutcome::equal);
    CHECK(equal_ledger.buffer_queries() == 8);  // full scan of both 4-bit strings

    QueryLedger early_ledger;
    const BitString se = bs("1101");
    LedgerAccessor e(sa, early_ledger), f(se, early_ledger);
    CHECK(classical_compare(e, f) == CompareOutcome::less);
    CHECK(early_ledger.buffer_queries() == 2);  // decided by the first position
}

TEST_CASE("boosted compare stays within its query budget") {
    Rng rng(11);
    const std::size_t reps = 13;
    for (int trial = 0; trial < 50; ++trial) {
        const BitString sa = random_bits(rng, 64);
        BitString sb = random_bits(rng, 64);

        QueryLedger ledger;
        LedgerAccessor a(sa, ledger);
        MemoryAccessor b(sb);
        quantum_compare_with_reps(a, b, reps, BackendConfig::modeled_with(0.5), rng);
        // per repetition: one lump charge of ceil(sqrt(64)) = 8 on the
        // buffer-backed side, plus at most one validating read
        CHECK(ledger.buffer_queries() <= reps * (8 + 1));
        CHECK(ledger.buffer_queries() >= reps * 8);
    }
}

TEST_CASE("boosted compare reaches the pinned error rate") {
    Rng rng(13);
    const std::size_t reps = 13;  // compare_repetitions(16)
    const BackendConfig backend = BackendConfig::modeled_with(0.5);
    int wrong = 0;
    const int pairs = 10000;
    for (int i = 0; i < pairs; ++i) {
        BitString sa = random_bits(rng, 64);
        BitString sb = random_bits(rng, 64);
        if (sa == sb) sb.set(63, sb.bit(63) ? 0 : 1);
        MemoryAccessor a(sa), b(sb);
        const CompareOutcome got = quantum_compare_with_reps(a, b, reps, backend, rng);
        if (got != exact_compare(sa, sb)) ++wrong;
    }
    // per-compare error <= (1/2)^13, so about 1.2 expected here; 10 is far
    // outside any plausible healthy run
    CHECK(wrong <= 10);
}

TEST_CASE("exact backend compares correctly at small sizes") {
    Rng rng(17);
    const BackendConfig backend = BackendConfig::exact();
    int wrong = 0;
    for (int trial = 0; trial < 200; ++trial) {
        BitString sa = random_bits(rng, 16);
        BitString sb = random_bits(rng, 16);
        if (sa == sb) sb.set(0, sb.bit(0) ? 0 : 1);

        QueryLedger ledger;
        LedgerAccessor a(sa, ledger);
        MemoryAccessor b(sb);
        const CompareOutcome got = quantum_compare_with_reps(a, b, 13, backend, rng);
        if (got != exact_compare(sa, sb)) ++wrong;
        CHECK(ledger.buffer_queries() <= 13 * (10 * 4 + 1));  // reps * (budget + validation)
    }
    CHECK(wrong <= 2);
}

TEST_CASE("the mismatch oracle agrees between byte scans and generic scans") {
    Rng rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t len = 1 + rng.uniform_u64(20);
        const BitString sa = random_bits(rng, len);
        const BitString sb = random_bits(rng, len);

        MemoryAccessor fast_a(sa), fast_b(sb);
        DiffOracle fast(fast_a, fast_b);  // span path

        QueryLedger ledger;
        LedgerAccessor slow_a(sa, ledger);
        struct NoSpan final : StringAccessor {
            explicit NoSpan(const BitString& s) : s_(s) {}
            std::size_t length() const override { return s_.size(); }
            Bit at(std::size_t pos) override { return s_.bit(pos - 1); }
            Bit peek(std::size_t pos) const override { return s_.bit(pos - 1); }
            void charge(std::size_t) override {}
            const BitString& s_;
        } slow_b(sb);
        DiffOracle slow(slow_a, slow_b);  // one side has no span: generic path

        CHECK(fast.first_marked_at_or_after(1) == slow.first_marked_at_or_after(1));
        const std::size_t from = 1 + rng.uniform_u64(len);
        CHECK(fast.first_marked_at_or_after(from) == slow.first_marked_at_or_after(from));
        CHECK(fast.count_marked_in(1, len) == slow.count_marked_in(1, len));
        const std::size_t nth = 1 + rng.uniform_u64(3);
        CHECK(fast.nth_marked_in(1, len, nth) == slow.nth_marked_in(1, len, nth));
    }
}

TEST_CASE("compare rejects empty strings and zero repetitions") {
    Rng rng(23);
    const BitString sa = bs("1"), empty = bs("");
    MemoryAccessor a(sa), e(empty);
    CHECK_THROWS_AS(
        quantum_compare_with_reps(a, e, 2, BackendConfig::modeled_with(0.0), rng),
        std::invalid_argument);
    MemoryAccessor a2(sa);
    CHECK_THROWS_AS(
        quantum_compare_with_reps(a, a2, 0, BackendConfig::modeled_with(0.0), rng),
        std::invalid_argument);
}
