#include "pleth/equirep/random.hpp"

#include <algorithm>
#include <bit>

namespace pleth {

Exponent random_weight(Rng& rng, int nvars, int bound) {
    Exponent e;
    for (int i = 0; i < nvars; ++i) e[i] = rng.range(-bound, bound);
    return e;
}

WeightedSheaf subset_rep(int m, int k, bool sign_twist, const Exponent& w, int parity, int nvars) {
    auto G = symmetric_group(m);
    std::vector<Subset> subs;
    for (uint32_t mask = 0; mask < (1u << m); ++mask)
        if (std::popcount(mask) == k) subs.emplace_back(m, mask << 1);
    std::vector<BasisVector> basis(subs.size(), BasisVector{w, parity});
    std::vector<Matrix> rho;
    for (const auto& s : G->elements()) {
        std::vector<int> target, sign;
        for (const auto& a : subs) {
            target.push_back(static_cast<int>(std::find(subs.begin(), subs.end(), s.apply(a)) - subs.begin()));
            sign.push_back(sign_twist ? s.sign() : 1);
        }
        rho.push_back(Matrix::monomial(static_cast<int>(subs.size()), target, sign));
    }
    return WeightedSheaf::on_point(G, WeightedSpace(nvars, std::move(basis)), std::move(rho));
}

WeightedSheaf random_rep(Rng& rng, int m, int nvars) {
    auto one = [&] {
        int k = rng.range(0, m);
        return subset_rep(m, k, rng.chance(1, 2), random_weight(rng, nvars, 2), rng.chance(1, 3) ? 1 : 0, nvars);
    };
    auto f = one();
    if (rng.chance(1, 3)) f = direct_sum(f, one());
    return f;
}

WeightedSpace random_denominator(Rng& rng, int nvars) {
    for (;;) {
        WeightedSpace d(nvars, {});
        int dim = rng.range(1, 2);
        for (int i = 0; i < dim; ++i) d.basis.push_back({random_weight(rng, nvars, 1), rng.chance(1, 3) ? 1 : 0});
        if (!d.character().is_zero()) return d;
    }
}

QuotientPresentation random_presentation(Rng& rng, int nmax, int nvars) {
    QuotientPresentation p;
    p.nvars = nvars;
    for (int m = 1; m <= nmax; ++m) p.F.push_back(rng.chance(3, 4) ? random_rep(rng, m, nvars) : WeightedSheaf());
    p.D = random_denominator(rng, nvars);
    return p;
}

}  // namespace pleth
