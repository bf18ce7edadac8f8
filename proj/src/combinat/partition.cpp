#include "pleth/combinat/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pleth {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int IntPartition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int IntPartition::multiplicity(int j) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), j)); }

std::string IntPartition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<IntPartition> enumerate_int_partitions(int n) {
    std::vector<IntPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

uint64_t count_cycle_type(const IntPartition& lambda) {
    uint64_t num = 1;
    for (int i = 2; i <= lambda.size(); ++i) num *= static_cast<uint64_t>(i);
    uint64_t den = 1;
    for (int j = 1; j <= lambda.size(); ++j) {
        int a = lambda.multiplicity(j);
        for (int r = 0; r < a; ++r) den *= static_cast<uint64_t>(j);
        for (int r = 2; r <= a; ++r) den *= static_cast<uint64_t>(r);
    }
    return num / den;
}

Permutation permutation_of_type(const IntPartition& lambda) {
    int n = lambda.size();
    std::vector<int> img(static_cast<size_t>(n));
    int start = 1;
    for (int p : lambda.parts()) {
        for (int k = 0; k < p; ++k) img[static_cast<size_t>(start + k - 1)] = start + (k + 1) % p;
        start += p;
    }
    return Permutation(std::move(img));
}

SetPartition::SetPartition(int n, std::vector<Subset> blocks) : n_(n), blocks_(std::move(blocks)) {
    uint32_t seen = 0;
    for (const auto& b : blocks_) {
        if (b.n() != n) throw std::invalid_argument("block has wrong ambient size");
        if (b.empty()) throw std::invalid_argument("empty block");
        if (seen & b.mask()) throw std::invalid_argument("blocks overlap");
        seen |= b.mask();
    }
    if (seen != Subset::full(n).mask()) throw std::invalid_argument("blocks do not cover [n]");
    std::sort(blocks_.begin(), blocks_.end());
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<Subset> bs;
    for (const auto& b : blocks) bs.push_back(Subset::of(n, b));
    return {n, std::move(bs)};
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
    int n = static_cast<int>(labels.size());
    std::unordered_map<int, uint32_t> masks;
    for (int i = 1; i <= n; ++i) masks[labels[static_cast<size_t>(i - 1)]] |= 1u << i;
    std::vector<Subset> bs;
    for (auto& [lab, m] : masks) bs.emplace_back(n, m);
    return {n, std::move(bs)};
}

SetPartition SetPartition::singletons(int n) {
    std::vector<Subset> bs;
    for (int i = 1; i <= n; ++i) bs.emplace_back(n, 1u << i);
    return {n, std::move(bs)};
}

SetPartition SetPartition::one_block(int n) {
    if (n == 0) return {0, {}};
    return {n, {Subset::full(n)}};
}

int SetPartition::block_index_of(int i) const {
    for (size_t k = 0; k < blocks_.size(); ++k)
        if (blocks_[k].contains(i)) return static_cast<int>(k);
    throw std::out_of_range("element outside [n]");
}

bool SetPartition::refines(const SetPartition& coarser) const {
    if (n_ != coarser.n_) throw std::invalid_argument("refines: mismatched n");
    for (const auto& a : blocks_) {
        bool inside = false;
        for (const auto& b : coarser.blocks_)
            if (a.subset_of(b)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

SetPartition SetPartition::meet(const SetPartition& o) const {
    if (n_ != o.n_) throw std::invalid_argument("meet: mismatched n");
    std::vector<Subset> bs;
    for (const auto& a : blocks_)
        for (const auto& b : o.blocks_) {
            auto c = a & b;
            if (!c.empty()) bs.push_back(c);
        }
    return {n_, std::move(bs)};
}

SetPartition SetPartition::act(const Permutation& s) const {
    if (s.n() != n_) throw std::invalid_argument("act: mismatched n");
    std::vector<Subset> bs;
    for (const auto& b : blocks_) bs.push_back(s.apply(b));
    return {n_, std::move(bs)};
}

IntPartition SetPartition::type() const {
    std::vector<int> sizes;
    for (const auto& b : blocks_) sizes.push_back(b.size());
    return IntPartition(sizes);
}

uint64_t SetPartition::code() const {
    std::vector<int> rgs(static_cast<size_t>(n_), -1);
    int next = 0;
    for (int i = 1; i <= n_; ++i) {
        if (rgs[static_cast<size_t>(i - 1)] >= 0) continue;
        for (int j : block_of(i).members()) rgs[static_cast<size_t>(j - 1)] = next;
        ++next;
    }
    uint64_t c = 0;
    for (int v : rgs) c = (c << 4) | static_cast<uint64_t>(v);
    return c;
}

std::string SetPartition::str() const {
    std::string s = "{";
    for (size_t k = 0; k < blocks_.size(); ++k) {
        if (k) s += ',';
        s += blocks_[k].str();
    }
    return s + "}";
}

std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(),
                                                  b.blocks_.end());
}

bool refines(const SetPartition& a, const SetPartition& b) { return a.refines(b); }
SetPartition meet(const SetPartition& a, const SetPartition& b) { return a.meet(b); }
SetPartition act_partition(const Permutation& s, const SetPartition& a) { return a.act(s); }

bool sim_alpha(const SetPartition& b, const SetPartition& c, const SetPartition& alpha) {
    return b.meet(alpha) == c.meet(alpha);
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> out;
    std::vector<int> labels(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            out.push_back(SetPartition::from_labels(labels));
            return;
        }
        for (int l = 0; l <= used; ++l) {
            labels[static_cast<size_t>(i)] = l;
            rec(i + 1, std::max(used, l + 1));
        }
    };
    if (n == 0) return {SetPartition::one_block(0)};
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

PartitionIndex::PartitionIndex(int n) : n_(n), parts_(enumerate_set_partitions(n)) {
    int c = count();
    for (int i = 0; i < c; ++i) by_code_[parts_[static_cast<size_t>(i)].code()] = i;
    meet_.resize(static_cast<size_t>(c * c));
    refines_.resize(static_cast<size_t>(c * c));
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b) {
            meet_[static_cast<size_t>(a * c + b)] = index_of(at(a).meet(at(b)));
            refines_[static_cast<size_t>(a * c + b)] = at(a).refines(at(b)) ? 1 : 0;
        }
    singletons_ = index_of(SetPartition::singletons(n));
    one_block_ = index_of(SetPartition::one_block(n));
}

int PartitionIndex::index_of(const SetPartition& p) const {
    auto it = by_code_.find(p.code());
    if (it == by_code_.end() || p.n() != n_) throw std::invalid_argument("partition not in index");
    return it->second;
}

std::vector<int> PartitionIndex::action_table(const Permutation& s) const {
    std::vector<int> t(parts_.size());
    for (size_t a = 0; a < parts_.size(); ++a) t[a] = index_of(parts_[a].act(s));
    return t;
}

}  // namespace pleth
