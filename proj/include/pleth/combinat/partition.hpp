#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "pleth/combinat/permutation.hpp"
#include "pleth/combinat/subset.hpp"

namespace pleth {

// Integer partition, parts weakly decreasing.
class IntPartition {
public:
    IntPartition() = default;
    explicit IntPartition(std::vector<int> parts);  // sorted on construction

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    int multiplicity(int j) const;
    std::string str() const;  // "(2,1,1)"

    friend bool operator==(const IntPartition&, const IntPartition&) = default;
    friend auto operator<=>(const IntPartition&, const IntPartition&) = default;

private:
    std::vector<int> parts_;
};

// Partitions of n in reverse lexicographic order, starting with (n).
std::vector<IntPartition> enumerate_int_partitions(int n);
// Number of permutations of cycle type lambda: n! / prod j^{a_j} a_j!.
uint64_t count_cycle_type(const IntPartition& lambda);
// A fixed permutation of the given cycle type (cycles on consecutive runs).
Permutation permutation_of_type(const IntPartition& lambda);

// Set partition of [n], blocks stored in increasing binary order.
class SetPartition {
public:
    SetPartition() = default;
    SetPartition(int n, std::vector<Subset> blocks);
    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    static SetPartition from_labels(const std::vector<int>& labels);  // labels[i-1] names the block of i
    static SetPartition singletons(int n);
    static SetPartition one_block(int n);

    int n() const { return n_; }
    const std::vector<Subset>& blocks() const { return blocks_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    int block_index_of(int i) const;
    const Subset& block_of(int i) const { return blocks_[static_cast<size_t>(block_index_of(i))]; }
    bool same_block(int i, int j) const { return block_index_of(i) == block_index_of(j); }

    bool refines(const SetPartition& coarser) const;
    SetPartition meet(const SetPartition& o) const;
    SetPartition act(const Permutation& s) const;
    IntPartition type() const;
    uint64_t code() const;  // restricted growth string, 4 bits per element (n <= 16)
    std::string str() const;  // "{{1,3},{2}}"

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    // Lexicographic on block lists in the binary order.
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b);

private:
    int n_ = 0;
    std::vector<Subset> blocks_;
};

bool refines(const SetPartition& a, const SetPartition& b);
SetPartition meet(const SetPartition& a, const SetPartition& b);
SetPartition act_partition(const Permutation& s, const SetPartition& a);
// b ~_alpha c iff meet(b, alpha) = meet(c, alpha).
bool sim_alpha(const SetPartition& b, const SetPartition& c, const SetPartition& alpha);

std::vector<SetPartition> enumerate_set_partitions(int n);

// All set partitions of [n] with precomputed meet and refinement tables.
class PartitionIndex {
public:
    explicit PartitionIndex(int n);

    int n() const { return n_; }
    int count() const { return static_cast<int>(parts_.size()); }
    const SetPartition& at(int idx) const { return parts_[static_cast<size_t>(idx)]; }
    const std::vector<SetPartition>& all() const { return parts_; }
    int index_of(const SetPartition& p) const;

    int meet(int a, int b) const { return meet_[static_cast<size_t>(a * count() + b)]; }
    bool refines(int a, int b) const { return refines_[static_cast<size_t>(a * count() + b)] != 0; }
    bool sim(int b, int c, int alpha) const { return meet(b, alpha) == meet(c, alpha); }
    // Table of a -> s(a) for a fixed permutation.
    std::vector<int> action_table(const Permutation& s) const;
    int singletons() const { return singletons_; }
    int one_block() const { return one_block_; }

private:
    int n_;
    std::vector<SetPartition> parts_;
    std::unordered_map<uint64_t, int> by_code_;
    std::vector<int> meet_;
    std::vector<char> refines_;
    int singletons_ = 0;
    int one_block_ = 0;
};

}  // namespace pleth
