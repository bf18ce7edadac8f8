#include "pleth/coeffring/linalg.hpp"

namespace pleth {

EchelonBasis::Reduction EchelonBasis::reduce(SparseVec v) const {
    Reduction r;
    size_t k = 0;
    while (k < v.size()) {
        int idx = v[k].first;
        int row = idx < static_cast<int>(pivot_row_.size()) ? pivot_row_[static_cast<size_t>(idx)] : -1;
        if (row < 0) {
            ++k;
            continue;
        }
        const Row& b = rows_[static_cast<size_t>(row)];
        Rational c = v[k].second / b.vec.front().second;
        v = axpy(v, -c, b.vec);
        r.coords = axpy(r.coords, c, b.tag);
        // Entries before position k are untouched, and index idx is now zero.
    }
    r.residual = std::move(v);
    return r;
}

bool EchelonBasis::insert(const SparseVec& v, const SparseVec& tag) {
    Reduction r = reduce(v);
    if (r.residual.empty()) return false;
    int lead = r.residual.front().first;
    // The residual only has non-pivot indices, so its first index is free.
    if (static_cast<int>(pivot_row_.size()) <= lead) pivot_row_.resize(static_cast<size_t>(lead) + 1, -1);
    pivot_row_[static_cast<size_t>(lead)] = static_cast<int>(rows_.size());
    rows_.push_back({std::move(r.residual), axpy(tag, -1, r.coords)});
    return true;
}

int rank(const Matrix& m) {
    EchelonBasis e;
    for (int j = 0; j < m.cols(); ++j) e.insert(m.col(j));
    return e.rank();
}

std::vector<SparseVec> kernel_basis(const Matrix& m) {
    EchelonBasis e;
    std::vector<SparseVec> out;
    for (int j = 0; j < m.cols(); ++j) {
        SparseVec tag{{j, Rational(1)}};
        auto r = e.reduce(m.col(j));
        if (r.residual.empty()) {
            out.push_back(axpy(tag, -1, r.coords));
        } else {
            e.insert(m.col(j), tag);
        }
    }
    return out;
}

std::vector<int> pivot_columns(const Matrix& m) {
    EchelonBasis e;
    std::vector<int> out;
    for (int j = 0; j < m.cols(); ++j)
        if (e.insert(m.col(j))) out.push_back(j);
    return out;
}

}  // namespace pleth
