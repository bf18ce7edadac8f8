#pragma once

#include <vector>

#include "pleth/common/report.hpp"
#include "pleth/treecx/differential.hpp"

namespace pleth {

struct PsiValue {
    Subset psi1;
    int psi2 = 0, psi3 = 0, psi4 = 0, psi5 = 0;

    friend bool operator==(const PsiValue&, const PsiValue&) = default;
    std::string str() const;
};

// Sign of a - b in the psi order: psi1 in reversed binary order, then the
// counts as integers.
int psi_compare(const PsiValue& a, const PsiValue& b);

// The two-block partition as an ordered pair (b1, b2).
struct BlockPair {
    Subset b1, b2;
    static BlockPair of(const SetPartition& b, bool swapped = false);  // b1 binary-smaller unless swapped
};

std::vector<SetPartition> two_block_partitions(int n);

// Binary-minimal label contained in neither block.
Subset psi_node(const IndexTree& t, const BlockPair& b);
PsiValue psi(const IndexTree& t, const BlockPair& b);
PsiValue psi(const IndexTree& t, const SetPartition& b);

enum class MatchType { None, P, Q1, Q2 };
const char* match_type_name(MatchType m);
MatchType match_type(const Contraction& c, const BlockPair& b);

// Every contraction weakly lowers psi; all two-block partitions, both orientations.
Report check_psi_monotone(int n);
// psi-preserving contractions pair up all trees, each of type P, Q1 or Q2,
// with the meet against the blocks unchanged.
Report psi_matching(int n, const SetPartition& b, bool swapped = false);

}  // namespace pleth
