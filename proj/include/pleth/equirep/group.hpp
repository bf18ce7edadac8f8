#pragma once

#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "pleth/combinat/partition.hpp"
#include "pleth/combinat/permutation.hpp"

namespace pleth {

// Finite subgroup of S_n given by its full element list. Element 0 is the
// identity.
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int n, std::vector<Permutation> elements);
    static PermGroup symmetric(int n);
    static PermGroup trivial(int n);
    // Elements of S_n satisfying the predicate (assumed closed under products).
    static PermGroup filtered(int n, const std::function<bool(const Permutation&)>& keep);
    // Stabilizer of a set partition, blocks of equal size may be swapped.
    static PermGroup stabilizer(const SetPartition& a);

    int n() const { return n_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const std::vector<Permutation>& elements() const { return elems_; }
    const Permutation& at(int g) const { return elems_[static_cast<size_t>(g)]; }
    bool contains(const Permutation& s) const { return index_.count(s.code()) > 0; }
    int index_of(const Permutation& s) const;
    int mul(int g, int h) const {
        if (mul_.empty()) return index_of(at(g) * at(h));
        return mul_[static_cast<size_t>(g) * static_cast<size_t>(order()) + static_cast<size_t>(h)];
    }
    int inv(int g) const { return inv_[static_cast<size_t>(g)]; }
    bool is_subgroup_of(const PermGroup& o) const;

private:
    static constexpr int kMulTableLimit = 720;

    int n_ = 0;
    std::vector<Permutation> elems_;
    std::unordered_map<uint64_t, int> index_;
    std::vector<int> mul_;
    std::vector<int> inv_;
};

// Shared, cached instance of S_n.
std::shared_ptr<const PermGroup> symmetric_group(int n);

}  // namespace pleth
