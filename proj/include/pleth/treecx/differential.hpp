#pragma once

#include <vector>

#include "pleth/common/report.hpp"
#include "pleth/treecx/tree.hpp"

namespace pleth {

enum class ContractionKind { Ordinary, Exceptional };

struct Contraction {
    IndexTree source;
    Subset node;
    ContractionKind kind;
    IndexTree target;
};

// Ordinary: drop one internal non-root label. Exceptional: drop every label
// strictly inside an exceptional label.
IndexTree ordinary_contraction(const IndexTree& t, const Subset& v);
IndexTree exceptional_contraction(const IndexTree& t, const Subset& v);
std::vector<Contraction> contractions_of(const IndexTree& t);

// Signed coefficient of the symbol phi_{source, target}; source refines target.
struct FormalTerm {
    SetPartition source_partition;
    SetPartition target_partition;
    long coefficient = 0;
};

// Coefficient and symbol attached to a single contraction.
FormalTerm contraction_term(const Contraction& c);

struct DifferentialEntry {
    int source;  // index into enumerate_trees(n, k)
    int target;  // index into enumerate_trees(n, k - 1)
    std::vector<FormalTerm> terms;
};

struct Differential {
    int n = 0;
    int k = 0;
    std::vector<IndexTree> sources;
    std::vector<IndexTree> targets;
    std::vector<DifferentialEntry> entries;  // sorted by (source, target)
};

Differential differential(int n, int k);

Report check_d_squared(int n);
// Every contraction against every sigma in perms: sign square commutes and
// the contraction is carried to a contraction of the same kind.
Report check_equivariance(int n, const std::vector<Permutation>& perms);
Report check_equivariance(int n);  // all of S_n for n <= 4, generators above

// Gluing sign identity over all (blocks, subtrees, sigma). Cases where the
// glued tree is moved by sigma are counted separately in info.
Report sign_identity_check(int n);

}  // namespace pleth
