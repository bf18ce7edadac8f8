#include "pleth/equirep/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pleth {

PermGroup::PermGroup(int n, std::vector<Permutation> elements) : n_(n), elems_(std::move(elements)) {
    auto id = Permutation::identity(n);
    auto it = std::find(elems_.begin(), elems_.end(), id);
    if (it == elems_.end()) throw std::invalid_argument("group lacks the identity");
    std::iter_swap(elems_.begin(), it);
    for (size_t g = 0; g < elems_.size(); ++g) {
        if (elems_[g].n() != n) throw std::invalid_argument("group element of wrong degree");
        if (!index_.emplace(elems_[g].code(), static_cast<int>(g)).second)
            throw std::invalid_argument("repeated group element");
    }
    int c = order();
    inv_.resize(static_cast<size_t>(c));
    for (int g = 0; g < c; ++g) inv_[static_cast<size_t>(g)] = index_of(at(g).inverse());
    // The table is quadratic in the order; larger groups multiply on demand.
    if (c > kMulTableLimit) return;
    mul_.resize(static_cast<size_t>(c) * static_cast<size_t>(c));
    for (int g = 0; g < c; ++g)
        for (int h = 0; h < c; ++h) mul_[static_cast<size_t>(g * c + h)] = index_of(at(g) * at(h));
}

PermGroup PermGroup::symmetric(int n) { return {n, all_permutations(n)}; }

PermGroup PermGroup::trivial(int n) { return {n, {Permutation::identity(n)}}; }

PermGroup PermGroup::filtered(int n, const std::function<bool(const Permutation&)>& keep) {
    std::vector<Permutation> el;
    for (auto& s : all_permutations(n))
        if (keep(s)) el.push_back(std::move(s));
    return {n, std::move(el)};
}

PermGroup PermGroup::stabilizer(const SetPartition& a) {
    return filtered(a.n(), [&a](const Permutation& s) { return a.act(s) == a; });
}

int PermGroup::index_of(const Permutation& s) const {
    auto it = index_.find(s.code());
    if (it == index_.end() || s.n() != n_) throw std::invalid_argument("permutation " + s.str() + " not in group");
    return it->second;
}

bool PermGroup::is_subgroup_of(const PermGroup& o) const {
    if (n_ != o.n_) return false;
    return std::all_of(elems_.begin(), elems_.end(), [&o](const Permutation& s) { return o.contains(s); });
}

std::shared_ptr<const PermGroup> symmetric_group(int n) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const PermGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const PermGroup>(PermGroup::symmetric(n));
    return slot;
}

}  // namespace pleth
