#include "pleth/mainthm/diagonal.hpp"

#include <stdexcept>

#include "pleth/coeffring/linalg.hpp"

namespace pleth {

namespace {

DiagonalFiber diagonal_fiber(const GnComplex& cx, int x) {
    const auto& pc = cx.points[static_cast<size_t>(x)];
    const auto& G = *cx.sp().group();
    DiagonalFiber f;
    f.point = x;
    f.action.assign(static_cast<size_t>(G.order()), {});
    for (int k = 0; k < cx.n; ++k) {
        const auto& c = pc.c[static_cast<size_t>(k)];
        std::vector<SparseVec> ker;
        if (k == 0) {
            for (int j = 0; j < c.dim(); ++j) ker.push_back({{j, Rational(1)}});
        } else {
            ker = kernel_basis(pc.d[static_cast<size_t>(k)]);
        }
        EchelonBasis e;
        if (k + 1 < cx.n) {
            const Matrix& up = pc.d[static_cast<size_t>(k + 1)];
            for (int j = 0; j < up.cols(); ++j) e.insert(up.col(j));
        }
        WeightedSpace h(c.nvars, {});
        std::vector<SparseVec> reps;
        for (const auto& v : ker)
            if (e.insert(v, SparseVec{{static_cast<int>(reps.size()), Rational(1)}})) {
                reps.push_back(v);
                h.basis.push_back(c.basis[static_cast<size_t>(v.back().first)]);
            }
        for (int g = 0; g < G.order(); ++g) {
            Matrix a = gn_action(cx, g, x, k);
            Matrix m(h.dim(), h.dim());
            for (int r = 0; r < h.dim(); ++r) {
                auto red = e.reduce(a.apply(reps[static_cast<size_t>(r)]));
                if (!red.residual.empty()) throw std::logic_error("action leaves the cycles");
                m.set_col(r, red.coords);
            }
            f.action[static_cast<size_t>(g)].push_back(std::move(m));
        }
        f.h.push_back(std::move(h));
    }
    return f;
}

}  // namespace

DiagonalSheaf extract_hn(const GnComplex& cx) {
    const StratSpace& sp = cx.sp();
    for (int x = 0; x < sp.points(); ++x) {
        if (sp.on_diagonal(x)) continue;
        auto h = point_cohomology(cx, x);
        for (size_t k = 0; k < h.dims.size(); ++k)
            if (h.dims[k] != 0)
                throw std::runtime_error("nonzero cohomology off the diagonal at " + sp.point_str(x) + " in degree " +
                                         std::to_string(k));
    }
    DiagonalSheaf out;
    out.n = cx.n;
    for (int x : sp.diagonal()) out.fibers.push_back(diagonal_fiber(cx, x));
    return out;
}

LaurentPoly invariant_character(const DiagonalFiber& f, int n) {
    int nv = f.h.empty() ? 0 : f.h.front().nvars;
    LaurentPoly acc(nv);
    for (const auto& per : f.action)
        for (size_t k = 0; k < f.h.size(); ++k) acc += supertrace(f.h[k], per[k]);
    Rational order(1);
    for (int i = 2; i <= n; ++i) order *= Rational(i);
    acc *= Rational(1) / order;
    return acc;
}

LaurentPoly en_character(const DiagonalSheaf& h) {
    LaurentPoly acc;
    for (const auto& f : h.fibers) acc += invariant_character(f, h.n);
    return acc;
}

LaurentPoly invariant_euler_chain(const GnComplex& cx, int x) {
    const auto& G = *cx.sp().group();
    const auto& pc = cx.points[static_cast<size_t>(x)];
    LaurentPoly acc(cx.system->nvars());
    for (int g = 0; g < G.order(); ++g) {
        if (cx.sp().act(g, x) != x) continue;
        for (int k = 0; k < cx.n; ++k) acc += supertrace(pc.c[static_cast<size_t>(k)], gn_action(cx, g, x, k));
    }
    int stab = 0;
    for (int g = 0; g < G.order(); ++g) stab += cx.sp().act(g, x) == x;
    acc *= Rational(1) / Rational(stab);
    return acc;
}

}  // namespace pleth
