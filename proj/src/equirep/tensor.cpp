#include <stdexcept>

#include "pleth/equirep/space.hpp"

namespace pleth {

WeightedSpace tensor(const WeightedSpace& a, const WeightedSpace& b) {
    WeightedSpace r;
    r.nvars = std::max(a.nvars, b.nvars);
    for (const auto& x : a.basis)
        for (const auto& y : b.basis) r.basis.push_back({x.weight + y.weight, x.parity ^ y.parity});
    return r;
}

WeightedSpace tensor_all(const std::vector<WeightedSpace>& factors, int nvars) {
    WeightedSpace r = WeightedSpace::line(nvars);
    for (const auto& f : factors) r = tensor(r, f);
    return r;
}

Matrix koszul_reorder(const std::vector<WeightedSpace>& factors, const std::vector<int>& order) {
    size_t l = factors.size();
    if (order.size() != l) throw std::invalid_argument("koszul_reorder: order has wrong length");
    std::vector<int> dims(l), out_stride(l);
    int total = 1;
    for (size_t i = 0; i < l; ++i) {
        dims[i] = factors[i].dim();
        total *= dims[i];
    }
    // Stride of input factor i inside the output multi-index.
    int s = 1;
    for (size_t j = l; j-- > 0;) {
        out_stride[static_cast<size_t>(order[j])] = s;
        s *= dims[static_cast<size_t>(order[j])];
    }
    std::vector<int> target(static_cast<size_t>(total)), sign(static_cast<size_t>(total));
    std::vector<int> idx(l, 0);
    for (int flat = 0; flat < total; ++flat) {
        int rem = flat;
        for (size_t i = l; i-- > 0;) {
            idx[i] = rem % dims[i];
            rem /= dims[i];
        }
        int t = 0;
        for (size_t i = 0; i < l; ++i) t += idx[i] * out_stride[i];
        int inv = 0;
        for (size_t j = 0; j < l; ++j)
            for (size_t k = j + 1; k < l; ++k) {
                auto a = static_cast<size_t>(order[j]), b = static_cast<size_t>(order[k]);
                if (a > b) inv += factors[a].basis[static_cast<size_t>(idx[a])].parity *
                                  factors[b].basis[static_cast<size_t>(idx[b])].parity;
            }
        target[static_cast<size_t>(flat)] = t;
        sign[static_cast<size_t>(flat)] = inv % 2 ? -1 : 1;
    }
    return Matrix::monomial(total, target, sign);
}

}  // namespace pleth
