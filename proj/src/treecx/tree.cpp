#include "pleth/treecx/tree.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pleth {

std::string validate_label_family(int n, const std::vector<Subset>& labels) {
    if (n < 1 || n > Subset::kMaxN) return "order out of range";
    Subset full = Subset::full(n);
    bool has_root = false;
    for (size_t i = 0; i < labels.size(); ++i) {
        const Subset& a = labels[i];
        if (a.n() != n) return "label " + a.str() + " has the wrong ambient size";
        if (a.empty()) return "empty label";
        if (i > 0 && !(labels[i - 1] < a)) return "labels not strictly increasing";
        if (a == full) has_root = true;
    }
    if (!has_root) return "missing root label";
    for (const auto& a : labels) {
        uint32_t below = 0;
        for (const auto& b : labels) {
            if (a == b) continue;
            if (!a.disjoint(b) && !a.subset_of(b) && !b.subset_of(a))
                return "labels " + a.str() + " and " + b.str() + " overlap";
            if (b.subset_of(a)) below |= b.mask();
        }
        if (below != 0 && below != a.mask()) return "label " + a.str() + " is not the union of its strict subsets";
    }
    return {};
}

IndexTree::IndexTree(int n, std::vector<Subset> labels) : n_(n), labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    std::string err = validate_label_family(n, labels_);
    if (!err.empty()) throw std::invalid_argument("invalid index tree: " + err);
    for (const auto& a : labels_)
        if (!is_leaf(a)) internal_.push_back(a);
}

IndexTree IndexTree::single_leaf(int n) { return IndexTree(n, {Subset::full(n)}); }

IndexTree IndexTree::star(int n) {
    std::vector<Subset> ls{Subset::full(n)};
    if (n > 1)
        for (int i = 1; i <= n; ++i) ls.push_back(Subset::of(n, {i}));
    return IndexTree(n, ls);
}

bool IndexTree::has_label(const Subset& s) const { return std::binary_search(labels_.begin(), labels_.end(), s); }

bool IndexTree::is_leaf(const Subset& s) const {
    // Labels are sorted by mask and a strict subset has a smaller mask.
    for (const auto& b : labels_) {
        if (!(b < s)) break;
        if (b.subset_of(s)) return false;
    }
    return true;
}

bool IndexTree::is_internal(const Subset& s) const { return has_label(s) && !is_leaf(s); }

SetPartition IndexTree::leaves_partition() const {
    std::vector<Subset> bs;
    for (const auto& a : labels_)
        if (is_leaf(a)) bs.push_back(a);
    return SetPartition(n_, bs);
}

std::vector<Subset> IndexTree::children(const Subset& s) const {
    std::vector<Subset> out;
    // Scan downward so each maximal strict subset is seen before anything inside it.
    for (auto it = labels_.rbegin(); it != labels_.rend(); ++it) {
        const Subset& b = *it;
        if (!(b < s) || !b.subset_of(s)) continue;
        bool covered = false;
        for (const auto& c : out) covered = covered || b.subset_of(c);
        if (!covered) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool IndexTree::is_exceptional(const Subset& s) const {
    if (!is_internal(s)) return false;
    for (const auto& c : children(s))
        if (!is_leaf(c)) return false;
    return true;
}

IndexTree IndexTree::act(const Permutation& s) const {
    std::vector<Subset> ls;
    ls.reserve(labels_.size());
    for (const auto& a : labels_) ls.push_back(s.apply(a));
    return IndexTree(n_, std::move(ls));
}

std::string IndexTree::str() const {
    std::string r = "{";
    for (size_t i = 0; i < labels_.size(); ++i) r += (i ? "," : "") + labels_[i].str();
    return r + "}";
}

std::string IndexTree::graph() const {
    std::string r;
    for (const auto& a : internal_)
        for (const auto& c : children(a)) r += a.str() + " -> " + c.str() + "\n";
    return r;
}

std::strong_ordering operator<=>(const IndexTree& a, const IndexTree& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.labels_.begin(), a.labels_.end(), b.labels_.begin(),
                                                  b.labels_.end());
}

IndexTree act_tree(const Permutation& s, const IndexTree& t) { return t.act(s); }

int sign_s_exponent(const IndexTree& t, const Subset& l) {
    if (!t.is_internal(l)) throw std::invalid_argument("sign_s: " + l.str() + " is not an internal label");
    const auto& p = t.internal_labels();
    return static_cast<int>(std::lower_bound(p.begin(), p.end(), l) - p.begin());
}

int sign_s(const IndexTree& t, const Subset& l) { return sign_s_exponent(t, l) % 2 ? -1 : 1; }

int sign_l(const IndexTree& t, const Permutation& s) {
    const auto& p = t.internal_labels();
    std::vector<uint32_t> img;
    img.reserve(p.size());
    for (const auto& a : p) img.push_back(s.apply(a).mask());
    int c = 0;
    for (size_t i = 0; i < img.size(); ++i)
        for (size_t j = i + 1; j < img.size(); ++j) c += img[i] > img[j];
    return c;
}

IndexTree glue(const SetPartition& blocks, const std::vector<IndexTree>& trees) {
    if (static_cast<int>(trees.size()) != blocks.size()) throw std::invalid_argument("glue: tree count mismatch");
    int n = blocks.n();
    std::vector<Subset> ls{Subset::full(n)};
    for (size_t i = 0; i < trees.size(); ++i) {
        const Subset& a = blocks.blocks()[i];
        if (trees[i].n() != a.size()) throw std::invalid_argument("glue: tree order does not match block size");
        for (const auto& l : trees[i].labels()) {
            Subset e = embed(l, a);
            if (!(e == ls.front())) ls.push_back(e);
        }
    }
    return IndexTree(n, std::move(ls));
}

IndexTree subtree(const IndexTree& t, const Subset& a) {
    std::vector<Subset> ls;
    for (const auto& l : t.labels())
        if (l.subset_of(a)) ls.push_back(restrict_to(l, a));
    return IndexTree(a.size(), std::move(ls));
}

namespace {

void product_glue(const SetPartition& part, const std::vector<const std::vector<IndexTree>*>& choices, size_t i,
                  std::vector<IndexTree>& cur, std::vector<IndexTree>& out) {
    if (i == choices.size()) {
        out.push_back(glue(part, cur));
        return;
    }
    for (const auto& t : *choices[i]) {
        cur[i] = t;
        product_glue(part, choices, i + 1, cur, out);
    }
}

const std::vector<IndexTree>& trees_of_order(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<IndexTree>> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    std::vector<IndexTree> out{IndexTree::single_leaf(n)};
    for (const auto& part : enumerate_set_partitions(n)) {
        if (part.size() < 2) continue;
        std::vector<const std::vector<IndexTree>*> choices;
        for (const auto& b : part.blocks()) choices.push_back(&trees_of_order(b.size()));
        std::vector<IndexTree> cur(choices.size());
        product_glue(part, choices, 0, cur, out);
    }
    std::sort(out.begin(), out.end());
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::vector<IndexTree> enumerate_trees(int n, int k) {
    if (n < 1 || n > 9) throw std::out_of_range("enumerate_trees: n must be in 1..9");
    const auto& all = trees_of_order(n);
    if (k < 0) return all;
    std::vector<IndexTree> out;
    for (const auto& t : all)
        if (t.k() == k) out.push_back(t);
    return out;
}

std::vector<uint64_t> tree_counts_by_k(int n) {
    std::vector<uint64_t> c(static_cast<size_t>(n), 0);
    for (const auto& t : enumerate_trees(n)) ++c[static_cast<size_t>(t.k())];
    return c;
}

size_t TreeIndex::KeyHash::operator()(const std::vector<uint32_t>& v) const noexcept {
    size_t h = 1469598103934665603ull;
    for (uint32_t x : v) h = (h ^ x) * 1099511628211ull;
    return h;
}

TreeIndex::TreeIndex(int n) : n_(n), trees_(enumerate_trees(n)) {
    for (size_t i = 0; i < trees_.size(); ++i) {
        std::vector<uint32_t> key;
        for (const auto& l : trees_[i].labels()) key.push_back(l.mask());
        index_.emplace(std::move(key), static_cast<int>(i));
    }
}

int TreeIndex::index_of(const IndexTree& t) const {
    std::vector<uint32_t> key;
    for (const auto& l : t.labels()) key.push_back(l.mask());
    auto it = index_.find(key);
    if (it == index_.end()) throw std::invalid_argument("tree not in index: " + t.str());
    return it->second;
}

}  // namespace pleth
