#include "pleth/treecx/shlog.hpp"

#include <mutex>
#include <stdexcept>

#include "pleth/treecx/tree.hpp"

namespace pleth {

ShlogMultiset shlog_tree_formula(int n) {
    if (n < 1 || n > 7) throw std::out_of_range("shlog_tree_formula: n must be in 1..7");
    ShlogMultiset m;
    for (const auto& t : enumerate_trees(n)) ++m[{t.leaves_partition(), t.k()}];
    return m;
}

namespace {

const ShlogMultiset& inductive_memo(int n);

// Tensor product over the blocks: blocks of the pieces are moved onto each
// block of the outer partition, shifts add, multiplicities multiply.
void expand_blocks(const SetPartition& outer, size_t i, std::vector<Subset>& blocks, int shift, uint64_t mult,
                   ShlogMultiset& out) {
    if (i == outer.blocks().size()) {
        out[{SetPartition(outer.n(), blocks), shift + 1}] += mult;
        return;
    }
    const Subset& a = outer.blocks()[i];
    for (const auto& [key, c] : inductive_memo(a.size())) {
        size_t mark = blocks.size();
        for (const auto& b : key.first.blocks()) blocks.push_back(embed(b, a));
        expand_blocks(outer, i + 1, blocks, shift + key.second, mult * c, out);
        blocks.resize(mark);
    }
}

const ShlogMultiset& inductive_memo(int n) {
    static std::mutex mu;
    static std::map<int, ShlogMultiset> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    ShlogMultiset m;
    m[{SetPartition::one_block(n), 0}] = 1;
    for (const auto& outer : enumerate_set_partitions(n)) {
        if (outer.size() < 2) continue;
        std::vector<Subset> blocks;
        expand_blocks(outer, 0, blocks, 0, 1, m);
    }
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(n, std::move(m)).first->second;
}

}  // namespace

ShlogMultiset shlog_inductive(int n) {
    if (n < 1 || n > 7) throw std::out_of_range("shlog_inductive: n must be in 1..7");
    return inductive_memo(n);
}

std::string str(const ShlogMultiset& m) {
    std::string r;
    for (const auto& [key, c] : m)
        r += key.first.str() + "[" + std::to_string(key.second) + "] x" + std::to_string(c) + "\n";
    return r;
}

}  // namespace pleth
