#include "pleth/equirep/space.hpp"

namespace pleth {

WeightedSpace WeightedSpace::line(int nvars, const Exponent& w, int parity) { return {nvars, {{w, parity}}}; }

LaurentPoly WeightedSpace::character() const {
    LaurentPoly c(nvars);
    for (const auto& b : basis) c += LaurentPoly::monomial(nvars, b.weight, b.parity ? -1 : 1);
    return c;
}

WeightedSpace WeightedSpace::shifted() const {
    WeightedSpace r = *this;
    for (auto& b : r.basis) b.parity ^= 1;
    return r;
}

WeightedSpace WeightedSpace::twisted(const Exponent& w) const {
    WeightedSpace r = *this;
    for (auto& b : r.basis) b.weight = b.weight + w;
    return r;
}

WeightedSpace direct_sum(const WeightedSpace& a, const WeightedSpace& b) {
    WeightedSpace r = a;
    r.nvars = std::max(a.nvars, b.nvars);
    r.basis.insert(r.basis.end(), b.basis.begin(), b.basis.end());
    return r;
}

LaurentPoly supertrace(const WeightedSpace& v, const Matrix& m) {
    LaurentPoly c(v.nvars);
    for (int i = 0; i < v.dim(); ++i) {
        Rational d = m.at(i, i);
        if (d.is_zero()) continue;
        const auto& b = v.basis[static_cast<size_t>(i)];
        c += LaurentPoly::monomial(v.nvars, b.weight, b.parity ? -d : d);
    }
    return c;
}

bool is_homogeneous(const Matrix& m, const WeightedSpace& src, const WeightedSpace& dst) {
    if (m.cols() != src.dim() || m.rows() != dst.dim()) return false;
    for (int j = 0; j < m.cols(); ++j)
        for (const auto& [i, v] : m.col(j))
            if (!(src.basis[static_cast<size_t>(j)] == dst.basis[static_cast<size_t>(i)])) return false;
    return true;
}

}  // namespace pleth
