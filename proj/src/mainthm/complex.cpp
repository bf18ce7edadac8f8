#include "pleth/mainthm/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pleth/coeffring/linalg.hpp"
#include "pleth/treecx/differential.hpp"
#include "pleth/treecx/psi.hpp"

namespace pleth {

int GnComplex::tree_index(int k, const IndexTree& t) const {
    const auto& ts = trees[static_cast<size_t>(k)];
    auto it = std::lower_bound(ts.begin(), ts.end(), t);
    if (it == ts.end() || !(*it == t)) throw std::invalid_argument("tree not in complex: " + t.str());
    return static_cast<int>(it - ts.begin());
}

namespace {

struct Edge {
    int target;  // index in trees[k - 1]
    long coef;
    bool exceptional;
    int target_part;
};

int part_index(const StratSpace& sp, const IndexTree& t) { return sp.partitions().index_of(t.leaves_partition()); }

SparseVec shifted(const SparseVec& v, int by) {
    SparseVec r = v;
    for (auto& e : r) e.first += by;
    return r;
}

std::vector<int> range(int from, int len) {
    std::vector<int> r(static_cast<size_t>(len));
    std::iota(r.begin(), r.end(), from);
    return r;
}

}  // namespace

GnComplex build_gn(const System& strict) {
    if (!strict.strict()) throw std::invalid_argument("build_gn needs a strict system");
    GnComplex cx;
    cx.system = std::make_shared<const System>(strict);
    const StratSpace& sp = strict.sp();
    int n = sp.n();
    cx.n = n;
    for (int k = 0; k < n; ++k) cx.trees.push_back(enumerate_trees(n, k));
    std::vector<std::vector<int>> part(static_cast<size_t>(n));
    std::vector<std::vector<std::vector<Edge>>> edges(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        for (const auto& t : cx.trees[static_cast<size_t>(k)]) {
            part[static_cast<size_t>(k)].push_back(part_index(sp, t));
            std::vector<Edge> es;
            for (const auto& c : contractions_of(t)) {
                FormalTerm f = contraction_term(c);
                es.push_back({cx.tree_index(k - 1, c.target), f.coefficient, c.kind == ContractionKind::Exceptional,
                              part_index(sp, c.target)});
            }
            edges[static_cast<size_t>(k)].push_back(std::move(es));
        }
    }
    for (int x = 0; x < sp.points(); ++x) {
        PointComplex pc;
        for (int k = 0; k < n; ++k) {
            WeightedSpace c = WeightedSpace::zero(strict.nvars());
            std::vector<int> off;
            for (int p : part[static_cast<size_t>(k)]) {
                off.push_back(c.dim());
                const auto& f = strict.fiber(p, x);
                c = direct_sum(c, k % 2 ? f.shifted() : f);
            }
            pc.c.push_back(std::move(c));
            pc.offset.push_back(std::move(off));
        }
        pc.d.emplace_back();
        for (int k = 1; k < n; ++k) {
            Matrix d(pc.c[static_cast<size_t>(k - 1)].dim(), pc.c[static_cast<size_t>(k)].dim());
            const auto& ts = cx.trees[static_cast<size_t>(k)];
            for (size_t t = 0; t < ts.size(); ++t) {
                int src = part[static_cast<size_t>(k)][t];
                int width = strict.fiber(src, x).dim();
                int col0 = pc.offset[static_cast<size_t>(k)][t];
                for (int j = 0; j < width; ++j) {
                    SparseVec col;
                    for (const auto& e : edges[static_cast<size_t>(k)][t]) {
                        int row0 = pc.offset[static_cast<size_t>(k - 1)][static_cast<size_t>(e.target)];
                        SparseVec piece = e.exceptional ? strict.phi(src, e.target_part, x)->col(j)
                                                        : SparseVec{{j, Rational(1)}};
                        col = axpy(col, Rational(e.coef), shifted(piece, row0));
                    }
                    d.set_col(col0 + j, std::move(col));
                }
            }
            pc.d.push_back(std::move(d));
        }
        for (int k = 2; k < n; ++k) {
            Matrix dd = pc.d[static_cast<size_t>(k - 1)] * pc.d[static_cast<size_t>(k)];
            if (dd.is_zero()) continue;
            for (int j = 0; j < dd.cols(); ++j) {
                if (dd.col(j).empty()) continue;
                int row = dd.col(j).front().first;
                auto owner = [](const std::vector<int>& off, int idx) {
                    return static_cast<int>(std::upper_bound(off.begin(), off.end(), idx) - off.begin()) - 1;
                };
                int ts = owner(pc.offset[static_cast<size_t>(k)], j);
                int tt = owner(pc.offset[static_cast<size_t>(k - 2)], row);
                throw std::runtime_error("d^2 != 0 at " + sp.point_str(x) + " from " +
                                         cx.trees[static_cast<size_t>(k)][static_cast<size_t>(ts)].str() + " to " +
                                         cx.trees[static_cast<size_t>(k - 2)][static_cast<size_t>(tt)].str());
            }
        }
        cx.points.push_back(std::move(pc));
    }
    return cx;
}

Matrix gn_action(const GnComplex& cx, int g, int x, int k) {
    const StratSpace& sp = cx.sp();
    const System& s = *cx.system;
    const Permutation& sigma = sp.group()->at(g);
    int gx = sp.act(g, x);
    const auto& src = cx.points[static_cast<size_t>(x)];
    const auto& dst = cx.points[static_cast<size_t>(gx)];
    Matrix a(dst.c[static_cast<size_t>(k)].dim(), src.c[static_cast<size_t>(k)].dim());
    const auto& ts = cx.trees[static_cast<size_t>(k)];
    for (size_t t = 0; t < ts.size(); ++t) {
        int p = part_index(sp, ts[t]);
        const Matrix& r = s.rho(g, p, x);
        if (r.cols() == 0) continue;
        int tt = cx.tree_index(k, ts[t].act(sigma));
        Rational sign(sign_l(ts[t], sigma) % 2 ? -1 : 1);
        int row0 = dst.offset[static_cast<size_t>(k)][static_cast<size_t>(tt)];
        int col0 = src.offset[static_cast<size_t>(k)][t];
        for (int j = 0; j < r.cols(); ++j) a.set_col(col0 + j, scaled(shifted(r.col(j), row0), sign));
    }
    return a;
}

Report check_gn_equivariance(const GnComplex& cx) {
    Report rep("gn_equivariance");
    const StratSpace& sp = cx.sp();
    std::vector<int> gs;
    if (cx.n <= 3) {
        for (int g = 0; g < sp.group()->order(); ++g) gs.push_back(g);
    } else {
        for (const auto& s : sn_generators(cx.n)) gs.push_back(sp.group()->index_of(s));
    }
    for (int g : gs)
        for (int x = 0; x < sp.points(); ++x) {
            int gx = sp.act(g, x);
            Matrix prev = gn_action(cx, g, x, 0);
            for (int k = 1; k < cx.n; ++k) {
                Matrix cur = gn_action(cx, g, x, k);
                const Matrix& dx = cx.points[static_cast<size_t>(x)].d[static_cast<size_t>(k)];
                const Matrix& dgx = cx.points[static_cast<size_t>(gx)].d[static_cast<size_t>(k)];
                rep.expect(dgx * cur == prev * dx, "sigma=" + sp.group()->at(g).str() + " at " + sp.point_str(x) +
                                                       " degree " + std::to_string(k));
                prev = std::move(cur);
            }
        }
    return rep;
}

PointCohomology point_cohomology(const GnComplex& cx, int x) {
    const auto& pc = cx.points[static_cast<size_t>(x)];
    int n = cx.n;
    int nv = cx.system->nvars();
    std::vector<int> rk(static_cast<size_t>(n + 1), 0);
    std::vector<LaurentPoly> piv(static_cast<size_t>(n + 1), LaurentPoly(nv));
    for (int k = 1; k < n; ++k) {
        auto cols = pivot_columns(pc.d[static_cast<size_t>(k)]);
        rk[static_cast<size_t>(k)] = static_cast<int>(cols.size());
        WeightedSpace w(nv, {});
        for (int j : cols) w.basis.push_back(pc.c[static_cast<size_t>(k)].basis[static_cast<size_t>(j)]);
        piv[static_cast<size_t>(k)] = w.character();
    }
    PointCohomology h;
    h.euler_chain = LaurentPoly(nv);
    for (int k = 0; k < n; ++k) {
        const auto& c = pc.c[static_cast<size_t>(k)];
        h.dims.push_back(c.dim() - rk[static_cast<size_t>(k)] - rk[static_cast<size_t>(k + 1)]);
        h.chars.push_back(c.character() - piv[static_cast<size_t>(k)] + piv[static_cast<size_t>(k + 1)]);
        h.euler_chain += c.character();
    }
    return h;
}

Report filtration_check(const GnComplex& cx, const SetPartition& part, bool swapped) {
    Report rep("filtration");
    const StratSpace& sp = cx.sp();
    BlockPair b = BlockPair::of(part, swapped);
    int bidx = sp.partitions().index_of(part);
    std::set<std::string> levels;
    std::vector<std::vector<int>> hits(cx.trees.size());
    for (size_t k = 0; k < cx.trees.size(); ++k) hits[k].assign(cx.trees[k].size(), 0);
    std::string tag = "B=" + part.str() + (swapped ? " swapped" : "");
    std::vector<int> locus;
    for (int x = 0; x < sp.points(); ++x)
        if (sp.in_u(x, bidx)) locus.push_back(x);
    for (int k = 0; k < cx.n; ++k) {
        const auto& ts = cx.trees[static_cast<size_t>(k)];
        for (size_t t = 0; t < ts.size(); ++t) {
            PsiValue pt = psi(ts[t], b);
            levels.insert(pt.str());
            for (const auto& c : contractions_of(ts[t])) {
                int cmp = psi_compare(pt, psi(c.target, b));
                rep.expect(cmp >= 0, tag + " d raises psi at " + ts[t].str());
                if (cmp != 0) continue;
                int tt = cx.tree_index(k - 1, c.target);
                ++hits[static_cast<size_t>(k)][t];
                ++hits[static_cast<size_t>(k - 1)][static_cast<size_t>(tt)];
                for (int x : locus) {
                    const auto& pc = cx.points[static_cast<size_t>(x)];
                    const auto& ok = pc.offset[static_cast<size_t>(k)];
                    const auto& ok1 = pc.offset[static_cast<size_t>(k - 1)];
                    int w = (t + 1 < ok.size() ? ok[t + 1] : pc.c[static_cast<size_t>(k)].dim()) - ok[t];
                    size_t u = static_cast<size_t>(tt);
                    int h = (u + 1 < ok1.size() ? ok1[u + 1] : pc.c[static_cast<size_t>(k - 1)].dim()) - ok1[u];
                    Matrix blk = pc.d[static_cast<size_t>(k)].submatrix(range(ok1[u], h), range(ok[t], w));
                    rep.expect(is_invertible(blk), tag + " pair " + ts[t].str() + " -> " + c.target.str() +
                                                       " not invertible at " + sp.point_str(x));
                }
            }
        }
    }
    for (size_t k = 0; k < hits.size(); ++k)
        for (size_t t = 0; t < hits[k].size(); ++t)
            rep.expect(hits[k][t] == 1, tag + " tree " + cx.trees[k][t].str() + " is in " +
                                            std::to_string(hits[k][t]) + " psi-preserving pairs");
    rep.info["levels"] = std::to_string(levels.size());
    rep.info["locus_points"] = std::to_string(locus.size());
    return rep;
}

}  // namespace pleth
