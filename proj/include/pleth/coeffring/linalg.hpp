#pragma once

#include <vector>

#include "pleth/coeffring/matrix.hpp"

namespace pleth {

// Incrementally built semi-echelon basis of a subspace of Q^m. Stored vectors
// have distinct leading indices. Each generator may carry a tag vector; the
// stored vectors keep tags so that every stored vector equals the tag-weighted
// sum of the inserted generators. This gives coordinates for free.
class EchelonBasis {
public:
    struct Reduction {
        SparseVec residual;  // v minus its projection along pivots
        SparseVec coords;    // v = residual + sum coords[k] * generator_k
    };

    Reduction reduce(SparseVec v) const;
    // Returns true if v was independent of the current span.
    bool insert(const SparseVec& v, const SparseVec& tag = {});
    bool contains(const SparseVec& v) const { return reduce(v).residual.empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    struct Row {
        SparseVec vec;
        SparseVec tag;
    };
    std::vector<Row> rows_;
    std::vector<int> pivot_row_;  // leading index -> row, -1 if none
};

int rank(const Matrix& m);
// Basis of the null space, one vector per non-pivot column, in column order.
std::vector<SparseVec> kernel_basis(const Matrix& m);
// Indices of the columns selected greedily from the left that form a basis of
// the column space.
std::vector<int> pivot_columns(const Matrix& m);

}  // namespace pleth
