#pragma once

#include <compare>
#include <string>
#include <unordered_map>
#include <vector>

#include "pleth/combinat/partition.hpp"
#include "pleth/combinat/permutation.hpp"
#include "pleth/combinat/subset.hpp"

namespace pleth {

// Index tree stored as its label family: a laminar family of subsets of [n]
// containing [n], where every non-minimal member is the union of its strict
// subsets in the family. Labels are kept in increasing binary order.
class IndexTree {
public:
    IndexTree() = default;
    IndexTree(int n, std::vector<Subset> labels);  // validates
    static IndexTree single_leaf(int n);
    static IndexTree star(int n);

    int n() const { return n_; }
    const std::vector<Subset>& labels() const { return labels_; }
    bool has_label(const Subset& s) const;

    // Minimal labels form the leaf partition; the others are internal (P(T)).
    SetPartition leaves_partition() const;
    const std::vector<Subset>& internal_labels() const { return internal_; }
    int k() const { return static_cast<int>(internal_.size()); }
    bool is_leaf(const Subset& s) const;
    bool is_internal(const Subset& s) const;
    // Maximal labels strictly inside s.
    std::vector<Subset> children(const Subset& s) const;
    // Non-leaf with only leaf children.
    bool is_exceptional(const Subset& s) const;

    IndexTree act(const Permutation& s) const;
    std::string str() const;    // "{{1},{2},{1,2}}"
    std::string graph() const;  // one "parent -> child" line per edge

    friend bool operator==(const IndexTree& a, const IndexTree& b) {
        return a.n_ == b.n_ && a.labels_ == b.labels_;
    }
    friend std::strong_ordering operator<=>(const IndexTree& a, const IndexTree& b);

private:
    int n_ = 0;
    std::vector<Subset> labels_;
    std::vector<Subset> internal_;
};

// Empty string if the family satisfies the index-tree conditions.
std::string validate_label_family(int n, const std::vector<Subset>& labels);

IndexTree act_tree(const Permutation& s, const IndexTree& t);

// Number of internal labels strictly below l in the binary order; s(v) is
// (-1) to this power.
int sign_s_exponent(const IndexTree& t, const Subset& l);
int sign_s(const IndexTree& t, const Subset& l);
// Pairs A < B of internal labels with s(A) > s(B).
int sign_l(const IndexTree& t, const Permutation& s);

// Glue trees under a common root: trees[i] is a tree of order |blocks[i]|,
// transported along the order-preserving bijection onto blocks[i].
IndexTree glue(const SetPartition& blocks, const std::vector<IndexTree>& trees);
// Subtree below label a, transported to order |a|.
IndexTree subtree(const IndexTree& t, const Subset& a);

// All index trees of order n, sorted; optionally only those with k internal labels.
std::vector<IndexTree> enumerate_trees(int n, int k = -1);
// Counts by number of internal labels, k = 0..n-1.
std::vector<uint64_t> tree_counts_by_k(int n);

// Index of every tree of order n (sorted as enumerate_trees).
class TreeIndex {
public:
    explicit TreeIndex(int n);
    int n() const { return n_; }
    int count() const { return static_cast<int>(trees_.size()); }
    const IndexTree& at(int i) const { return trees_[static_cast<size_t>(i)]; }
    const std::vector<IndexTree>& all() const { return trees_; }
    int index_of(const IndexTree& t) const;

private:
    struct KeyHash {
        size_t operator()(const std::vector<uint32_t>& v) const noexcept;
    };
    int n_;
    std::vector<IndexTree> trees_;
    std::unordered_map<std::vector<uint32_t>, int, KeyHash> index_;
};

}  // namespace pleth
