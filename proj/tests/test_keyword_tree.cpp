#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

#include "qrag/compare.hpp"
#include "qrag/keyword_tree.hpp"
#include "qrag/rng.hpp"

using namespace qrag;

namespace {

BitString bs(const std::string& text) { return BitString::from_text(text); }

BitString random_bits(Rng& rng, std::size_t len) {
    BitString s(len);
    for (std::size_t i = 0; i < len; ++i) s.set(i, rng.bit());
    return s;
}

}  // namespace

TEST_CASE("eight keys sort in order within height four") {
    KeywordTree tree;
    const std::vector<std::string> keys = {"110", "010", "111", "000",
                                           "101", "011", "100", "001"};
    for (std::size_t i = 0; i < keys.size(); ++i) {
        CHECK(tree.add(i + 1, bs(keys[i])));
        tree.check_invariants();
    }
    CHECK(tree.size() == 8);
    CHECK(tree.height() <= 4);

    std::vector<std::string> inorder;
    tree.for_each_inorder([&](const KeywordTree::Node& n) { inorder.push_back(n.key.to_text()); });
    const std::vector<std::string> want = {"000", "001", "010", "011",
                                           "100", "101", "110", "111"};
    CHECK(inorder == want);
}

TEST_CASE("duplicate keys keep the first index and do not grow the tree") {
    KeywordTree tree;
    CHECK(tree.add(3, bs("0101")));
    CHECK_FALSE(tree.add(7, bs("0101")));
    CHECK(tree.size() == 1);
    const KeywordTree::Node* node = tree.find_exact(bs("0101"));
    REQUIRE(node != nullptr);
    CHECK(node->index == 3);
}

TEST_CASE("exact lookup hits and misses") {
    KeywordTree tree;
    tree.add(1, bs("00"));
    tree.add(2, bs("01"));
    tree.add(3, bs("11"));
    CHECK(tree.find_exact(bs("01"))->index == 2);
    CHECK(tree.find_exact(bs("10")) == nullptr);
}

TEST_CASE("a descent inspects at most height-many nodes") {
    KeywordTree tree;
    Rng rng(29);
    std::vector<BitString> keys;
    while (keys.size() < 50) {
        BitString key = random_bits(rng, 10);
        if (tree.add(keys.size() + 1, key)) keys.push_back(std::move(key));
    }
    tree.check_invariants();
    CHECK(tree.height() <= 7);  // 50 nodes, AVL

    for (const BitString& probe : keys) {
        int compares = 0;
        const KeywordTree::Node* hit = tree.find_with([&](const KeywordTree::Node& n) {
            ++compares;
            return exact_compare(probe, n.key);
        });
        REQUIRE(hit != nullptr);
        CHECK(hit->key == probe);
        CHECK(compares <= tree.height());
    }
}

TEST_CASE("random insertion keeps the AVL invariants") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        KeywordTree tree;
        const std::size_t count = 1 + rng.uniform_u64(60);
        std::map<std::string, std::size_t> reference;
        for (std::size_t i = 1; i <= count; ++i) {
            BitString key = random_bits(rng, 1 + rng.uniform_u64(8));
            const bool fresh = reference.emplace(key.to_text(), i).second;
            CHECK(tree.add(i, std::move(key)) == fresh);
            tree.check_invariants();
        }
        CHECK(tree.size() == reference.size());

        std::vector<std::string> inorder;
        tree.for_each_inorder([&](const KeywordTree::Node& n) {
            inorder.push_back(n.key.to_text());
            CHECK(n.index == reference.at(n.key.to_text()));
        });
        std::vector<std::string> want;
        for (const auto& [text, idx] : reference) want.push_back(text);
        CHECK(inorder == want);
    }
}

TEST_CASE("bump_count raises counts and the tracker follows the maximum") {
    KeywordTree tree;
    tree.add(1, bs("11"));
    tree.add(2, bs("00"));
    MaxTracker tracker;
    CHECK(tracker.i_max == 1);
    CHECK(tracker.c_max == 1);

    KeywordTree::Node* one = tree.find_exact(bs("11"));
    KeywordTree::Node* two = tree.find_exact(bs("00"));
    REQUIRE(one != nullptr);
    REQUIRE(two != nullptr);

    bump_count(*two, tracker, TrackerMode::faithful);  // counts (0,1)
    CHECK(tracker.i_max == 1);  // a count of 1 never beats the initial maximum
    bump_count(*two, tracker, TrackerMode::faithful);  // counts (0,2)
    CHECK(tracker.i_max == 2);
    CHECK(tracker.c_max == 2);
    bump_count(*one, tracker, TrackerMode::faithful);  // counts (1,2)
    bump_count(*one, tracker, TrackerMode::faithful);  // counts (2,2): tie
    CHECK(tracker.i_max == 2);  // faithful keeps the incumbent on ties
    bump_count(*one, tracker, TrackerMode::faithful);  // counts (3,2)
    CHECK(tracker.i_max == 1);
    CHECK(tracker.c_max == 3);

    CHECK(tree.total_count() == 5);
}

TEST_CASE("the strict tracker re-points to a smaller index on ties") {
    KeywordTree tree;
    tree.add(1, bs("11"));
    tree.add(2, bs("00"));
    MaxTracker tracker;
    KeywordTree::Node* one = tree.find_exact(bs("11"));
    KeywordTree::Node* two = tree.find_exact(bs("00"));

    bump_count(*two, tracker, TrackerMode::strict);
    bump_count(*two, tracker, TrackerMode::strict);  // counts (0,2)
    CHECK(tracker.i_max == 2);
    bump_count(*one, tracker, TrackerMode::strict);
    bump_count(*one, tracker, TrackerMode::strict);  // counts (2,2): tie
    CHECK(tracker.i_max == 1);  // strict prefers the smaller index
    CHECK(tracker.c_max == 2);
}

TEST_CASE("a fallible comparator still finds present keys almost always") {
    Rng rng(37);
    const BackendConfig backend = BackendConfig::modeled_with(0.5);
    const std::size_t reps = compare_repetitions(16);

    KeywordTree tree;
    std::vector<BitString> keys;
    while (keys.size() < 8) {
        BitString key = random_bits(rng, 64);
        if (tree.add(keys.size() + 1, key)) keys.push_back(std::move(key));
    }

    int missed = 0;
    const int lookups = 2000;
    for (int i = 0; i < lookups; ++i) {
        const BitString& probe = keys[rng.uniform_u64(keys.size())];
        const KeywordTree::Node* hit = tree.find_with([&](const KeywordTree::Node& n) {
            MemoryAccessor a(probe), b(n.key);
            return quantum_compare_with_reps(a, b, reps, backend, rng);
        });
        if (hit == nullptr || !(hit->key == probe)) ++missed;
    }
    // per-descent failure is bounded by height * (1/2)^13, about 5e-4 here;
    // 2000 lookups make roughly one expected miss
    CHECK(missed <= 10);
}

TEST_CASE("a fallible comparator miss falls off the tree rather than lying") {
    Rng rng(41);
    KeywordTree tree;
    tree.add(1, bs("1111"));
    tree.add(2, bs("0000"));
    const BitString absent = bs("0110");
    const BackendConfig backend = BackendConfig::modeled_with(0.0);
    const KeywordTree::Node* hit = tree.find_with([&](const KeywordTree::Node& n) {
        MemoryAccessor a(absent), b(n.key);
        return quantum_compare_with_reps(a, b, 2, backend, rng);
    });
    CHECK(hit == nullptr);
}
