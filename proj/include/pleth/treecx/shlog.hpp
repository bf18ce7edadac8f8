#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "pleth/combinat/partition.hpp"

namespace pleth {

// Multiset of summands F_A[k], keyed by (A, k).
using ShlogMultiset = std::map<std::pair<SetPartition, int>, uint64_t>;

// One summand per index tree: (leaf partition, number of internal labels).
ShlogMultiset shlog_tree_formula(int n);
// Expands G_n = F_n + (sum over A with >= 2 blocks of G_A)[1] recursively,
// where G_A is the tensor product of the G_{|A_i|} moved onto the blocks.
ShlogMultiset shlog_inductive(int n);

std::string str(const ShlogMultiset& m);

}  // namespace pleth
