#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>

#include "qrag/bitstring.hpp"
#include "qrag/compare.hpp"

namespace qrag {

/// Running argmax over (index, count) observations. Initialized to index 1
/// with count 1, so nothing changes until some count exceeds 1.
enum class TrackerMode { faithful, strict };

struct MaxTracker {
    KeywordIndex i_max = 1;
    std::uint64_t c_max = 1;

    /// faithful: adopt the node only when its count beats the maximum.
    /// strict: also re-point to a smaller index that ties the maximum.
    void observe(KeywordIndex index, std::uint64_t count, TrackerMode mode) {
        if (count > c_max) {
            c_max = count;
            i_max = index;
        } else if (mode == TrackerMode::strict && count == c_max && index < i_max) {
            i_max = index;
        }
    }
};

/// Self-balancing (AVL) search tree over keywords, ordered by their strings.
/// Insertion always compares exactly (the keys live in memory, comparison is
/// free); lookup takes a pluggable comparator, which is how the fallible
/// quantum compare steers the descent. No removal: the keyword set only grows.
class KeywordTree {
public:
    struct Node {
        KeywordIndex index;  // minimal keyword index carrying this string
        BitString key;
        std::uint64_t count = 0;
        int height = 1;
        std::unique_ptr<Node> left;
        std::unique_ptr<Node> right;
    };

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    const Node* root() const { return root_.get(); }

    /// Inserts (index, key) with count 0 unless the key is already present;
    /// the tree never re-indexes an existing key. Returns whether it grew.
    bool add(KeywordIndex index, BitString key) {
        bool grew = false;
        root_ = insert(std::move(root_), index, std::move(key), grew);
        if (grew) ++size_;
        return grew;
    }

    /// Descends with cmp(node key) = outcome of (probe vs key): less goes
    /// left, greater right, equal stops. The comparator may err; the walk
    /// just follows it. Returns nullptr on falling off a leaf.
    template <typename Compare>
    Node* find_with(Compare&& cmp) {
        Node* node = root_.get();
        while (node) {
            const CompareOutcome o = cmp(static_cast<const Node&>(*node));
            if (o == CompareOutcome::equal) return node;
            node = o == CompareOutcome::less ? node->left.get() : node->right.get();
        }
        return nullptr;
    }
    template <typename Compare>
    const Node* find_with(Compare&& cmp) const {
        return const_cast<KeywordTree*>(this)->find_with(std::forward<Compare>(cmp));
    }

    /// Exact lookup by key (free, in memory).
    Node* find_exact(const BitString& key) {
        return find_with([&](const Node& n) { return exact_compare(key, n.key); });
    }
    const Node* find_exact(const BitString& key) const {
        return const_cast<KeywordTree*>(this)->find_exact(key);
    }

    template <typename Visit>
    void for_each_inorder(Visit&& visit) const {
        walk(root_.get(), visit);
    }

    int height() const { return root_ ? root_->height : 0; }

    /// Full structural audit: key order, height bookkeeping, AVL balance,
    /// size. Cheap enough to run after every mutation in tests.
    void check_invariants() const {
        std::size_t visited = 0;
        audit(root_.get(), nullptr, nullptr, visited);
        if (visited != size_) throw std::logic_error("KeywordTree: size out of sync");
    }

    /// Sum of all counts (every bump adds exactly one).
    std::uint64_t total_count() const {
        std::uint64_t total = 0;
        for_each_inorder([&](const Node& n) { total += n.count; });
        return total;
    }

private:
    static int height_of(const Node* n) { return n ? n->height : 0; }
    static int balance_of(const Node* n) {
        return n ? height_of(n->left.get()) - height_of(n->right.get()) : 0;
    }
    static void refresh(Node* n) {
        n->height = 1 + std::max(height_of(n->left.get()), height_of(n->right.get()));
    }

    static std::unique_ptr<Node> rotate_right(std::unique_ptr<Node> y) {
        std::unique_ptr<Node> x = std::move(y->left);
        y->left = std::move(x->right);
        refresh(y.get());
        x->right = std::move(y);
        refresh(x.get());
        return x;
    }
    static std::unique_ptr<Node> rotate_left(std::unique_ptr<Node> x) {
        std::unique_ptr<Node> y = std::move(x->right);
        x->right = std::move(y->left);
        refresh(x.get());
        y->left = std::move(x);
        refresh(y.get());
        return y;
    }

    static std::unique_ptr<Node> rebalance(std::unique_ptr<Node> n) {
        refresh(n.get());
        const int b = balance_of(n.get());
        if (b > 1) {
            if (balance_of(n->left.get()) < 0) n->left = rotate_left(std::move(n->left));
            return rotate_right(std::move(n));
        }
        if (b < -1) {
            if (balance_of(n->right.get()) > 0) n->right = rotate_right(std::move(n->right));
            return rotate_left(std::move(n));
        }
        return n;
    }

    static std::unique_ptr<Node> insert(std::unique_ptr<Node> node, KeywordIndex index,
                                        BitString key, bool& grew) {
        if (!node) {
            grew = true;
            auto fresh = std::make_unique<Node>();
            fresh->index = index;
            fresh->key = std::move(key);
            return fresh;
        }
        const CompareOutcome o = exact_compare(key, node->key);
        if (o == CompareOutcome::equal) return node;  // present: keep the first index
        if (o == CompareOutcome::less)
            node->left = insert(std::move(node->left), index, std::move(key), grew);
        else
            node->right = insert(std::move(node->right), index, std::move(key), grew);
        return rebalance(std::move(node));
    }

    template <typename Visit>
    static void walk(const Node* n, Visit& visit) {
        if (!n) return;
        walk(n->left.get(), visit);
        visit(static_cast<const Node&>(*n));
        walk(n->right.get(), visit);
    }

    static int audit(const Node* n, const BitString* lo, const BitString* hi,
                     std::size_t& visited) {
        if (!n) return 0;
        if (lo && !(*lo < n->key)) throw std::logic_error("KeywordTree: order violated");
        if (hi && !(n->key < *hi)) throw std::logic_error("KeywordTree: order violated");
        ++visited;
        const int hl = audit(n->left.get(), lo, &n->key, visited);
        const int hr = audit(n->right.get(), &n->key, hi, visited);
        if (n->height != 1 + std::max(hl, hr))
            throw std::logic_error("KeywordTree: stale height");
        if (hl - hr > 1 || hr - hl > 1) throw std::logic_error("KeywordTree: unbalanced");
        return n->height;
    }

    std::unique_ptr<Node> root_;
    std::size_t size_ = 0;
};

/// One observed occurrence: increments the node's count and folds it into the
/// tracker under the given mode.
inline void bump_count(KeywordTree::Node& node, MaxTracker& tracker, TrackerMode mode) {
    ++node.count;
    tracker.observe(node.index, node.count, mode);
}

}  // namespace qrag
