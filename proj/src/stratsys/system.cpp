#include "pleth/stratsys/system.hpp"

#include <stdexcept>

#include "pleth/coeffring/linalg.hpp"

namespace pleth {

System::System(SpacePtr space, int nvars, bool strict) : space_(std::move(space)), nvars_(nvars), strict_(strict) {
    int c = num_objects();
    int pts = sp().points();
    fibers_.assign(static_cast<size_t>(c * pts), WeightedSpace::zero(nvars));
    pair_id_.assign(static_cast<size_t>(c * c), -1);
    const auto& pix = sp().partitions();
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            if (pix.refines(i, j)) {
                pair_id_[static_cast<size_t>(i * c + j)] = static_cast<int>(pairs_.size());
                pairs_.emplace_back(i, j);
            }
    phi_.resize(pairs_.size());
    for (size_t p = 0; p < pairs_.size(); ++p)
        for (int x = 0; x < pts; ++x) {
            if (domain(pairs_[p].first, pairs_[p].second, x))
                phi_[p].emplace_back(Matrix(0, 0));
            else
                phi_[p].emplace_back(std::nullopt);
        }
    rho_.assign(static_cast<size_t>(sp().group()->order()), std::vector<Matrix>(fibers_.size(), Matrix(0, 0)));
}

const Matrix* System::phi(int i, int j, int x) const {
    int p = pair_id(i, j);
    if (p < 0) return nullptr;
    const auto& m = phi_[static_cast<size_t>(p)][static_cast<size_t>(x)];
    return m ? &*m : nullptr;
}

void System::set_phi(int i, int j, int x, Matrix m) {
    int p = pair_id(i, j);
    if (p < 0) throw std::invalid_argument("set_phi: index does not refine target");
    phi_[static_cast<size_t>(p)][static_cast<size_t>(x)] = std::move(m);
}

std::vector<int> System::support() const {
    std::vector<int> out;
    for (int x = 0; x < sp().points(); ++x)
        for (int i = 0; i < num_objects(); ++i)
            if (fiber(i, x).dim() > 0) {
                out.push_back(x);
                break;
            }
    return out;
}

Matrix solve_in_basis(const Matrix& basis, const Matrix& vs) {
    EchelonBasis e;
    for (int c = 0; c < basis.cols(); ++c) e.insert(basis.col(c), SparseVec{{c, Rational(1)}});
    Matrix out(basis.cols(), vs.cols());
    for (int c = 0; c < vs.cols(); ++c) {
        auto r = e.reduce(vs.col(c));
        if (!r.residual.empty()) throw std::logic_error("solve_in_basis: vector outside the span");
        out.set_col(c, r.coords);
    }
    return out;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

namespace {

std::string where(const System& s, int i, int j, int x) {
    const auto& pix = s.sp().partitions();
    return pix.at(i).str() + " -> " + pix.at(j).str() + " at " + s.sp().point_str(x);
}

bool shape_ok(const Matrix& m, const WeightedSpace& src, const WeightedSpace& dst) {
    return m.cols() == src.dim() && m.rows() == dst.dim();
}

std::vector<int> check_elements(const StratSpace& sp) {
    const auto& G = *sp.group();
    std::vector<int> out;
    if (sp.n() <= 3) {
        for (int g = 0; g < G.order(); ++g) out.push_back(g);
    } else {
        for (const auto& s : sn_generators(sp.n())) out.push_back(G.index_of(s));
    }
    return out;
}

}  // namespace

Report check_system(const System& s, bool equivariance) {
    const StratSpace& sp = s.sp();
    const auto& pix = sp.partitions();
    const auto& G = *sp.group();
    Report dom(s.strict() ? "D_domains" : "C_domains"), ident(s.strict() ? "D2" : "C1"),
        comp(s.strict() ? "D1" : "C2"), inv("D3"), eq("equivariance");
    int pts = sp.points();
    for (const auto& [i, j] : s.pairs())
        for (int x = 0; x < pts; ++x) {
            const Matrix* m = s.phi(i, j, x);
            if (!dom.expect((m != nullptr) == s.domain(i, j, x), "presence " + where(s, i, j, x)) || !m) continue;
            const auto& a = s.fiber(i, x);
            const auto& b = s.fiber(j, x);
            if (!dom.expect(shape_ok(*m, a, b) && is_homogeneous(*m, a, b), "shape/weights " + where(s, i, j, x)))
                continue;
            if (i == j) ident.expect(*m == Matrix::identity(a.dim()), "identity " + where(s, i, j, x));
            if (s.strict() && sp.linked(i, j, x)) inv.expect(is_invertible(*m), "not invertible " + where(s, i, j, x));
        }
    if (!dom.pass) {
        Report rep("system");
        rep.absorb(dom);
        return rep;
    }
    for (const auto& [i, j] : s.pairs())
        for (int k = 0; k < s.num_objects(); ++k) {
            if (!pix.refines(j, k)) continue;
            for (int x = 0; x < pts; ++x) {
                const Matrix* a = s.phi(i, j, x);
                const Matrix* b = s.phi(j, k, x);
                const Matrix* c = s.phi(i, k, x);
                if (!a || !b || !c) continue;
                comp.expect(*b * *a == *c, "composition " + where(s, i, k, x) + " via " + pix.at(j).str());
            }
        }
    std::vector<int> gens;
    if (equivariance) gens = check_elements(sp);
    for (int g : gens)
        for (int i = 0; i < s.num_objects(); ++i)
            for (int x = 0; x < pts; ++x) {
                int gi = sp.act_partition(g, i), gx = sp.act(g, x);
                const Matrix& r = s.rho(g, i, x);
                if (!eq.expect(shape_ok(r, s.fiber(i, x), s.fiber(gi, gx)) &&
                                   is_homogeneous(r, s.fiber(i, x), s.fiber(gi, gx)),
                               "rho shape g=" + G.at(g).str() + " " + where(s, i, gi, x)))
                    continue;
                if (g == 0) eq.expect(r == Matrix::identity(s.fiber(i, x).dim()), "rho identity");
                for (int h = 0; h < G.order(); ++h) {
                    int hi = sp.act_partition(h, i), hx = sp.act(h, x);
                    eq.expect(s.rho(G.mul(g, h), i, x) == s.rho(g, hi, hx) * s.rho(h, i, x),
                              "rho cocycle g=" + G.at(g).str() + " h=" + G.at(h).str() + " at " + sp.point_str(x));
                }
            }
    for (int g : gens)
        for (const auto& [i, j] : s.pairs())
            for (int x = 0; x < pts; ++x) {
                const Matrix* m = s.phi(i, j, x);
                if (!m) continue;
                int gi = sp.act_partition(g, i), gj = sp.act_partition(g, j), gx = sp.act(g, x);
                const Matrix* mg = s.phi(gi, gj, gx);
                if (!eq.expect(mg != nullptr, "phi domain not invariant " + where(s, i, j, x))) continue;
                eq.expect(s.rho(g, j, x) * *m == *mg * s.rho(g, i, x),
                          "square g=" + G.at(g).str() + " " + where(s, i, j, x));
            }
    Report rep(s.strict() ? "strict_system" : "system");
    for (auto* r : {&dom, &ident, &comp, &inv, &eq}) {
        if (!s.strict() && r == &inv) continue;
        rep.info[r->check + "_cases"] = std::to_string(r->cases);
        rep.absorb(*r);
    }
    return rep;
}

Report check_morphism(const System& src, const System& dst, const SystemMorphism& f) {
    Report rep("morphism");
    const StratSpace& sp = src.sp();
    const auto& G = *sp.group();
    for (int i = 0; i < src.num_objects(); ++i)
        for (int x = 0; x < sp.points(); ++x)
            rep.expect(shape_ok(f.m[static_cast<size_t>(i)][static_cast<size_t>(x)], src.fiber(i, x), dst.fiber(i, x)),
                       "shape at " + sp.point_str(x));
    if (!rep.pass) return rep;
    auto at = [&](int i, int x) -> const Matrix& { return f.m[static_cast<size_t>(i)][static_cast<size_t>(x)]; };
    for (const auto& [i, j] : src.pairs())
        for (int x = 0; x < sp.points(); ++x) {
            const Matrix* a = src.phi(i, j, x);
            const Matrix* b = dst.phi(i, j, x);
            if (!a || !b) continue;
            rep.expect(at(j, x) * *a == *b * at(i, x), "phi square " + where(src, i, j, x));
        }
    for (int g = 0; g < G.order(); ++g)
        for (int i = 0; i < src.num_objects(); ++i)
            for (int x = 0; x < sp.points(); ++x) {
                int gi = sp.act_partition(g, i), gx = sp.act(g, x);
                rep.expect(at(gi, gx) * src.rho(g, i, x) == dst.rho(g, i, x) * at(i, x),
                           "rho square g=" + G.at(g).str() + " at " + sp.point_str(x));
            }
    return rep;
}

namespace {

// Rebuild a system from per-(i, x) bases: in(i, x) embeds the new fiber into
// the old carrier, out(i, x) maps the old carrier onto new coordinates.
template <class In, class Out>
System transport(const System& base, bool strict, const std::vector<WeightedSpace>& fibers, const In& in,
                 const Out& out, const System& domain_a, const System& domain_b) {
    const StratSpace& sp = base.sp();
    int pts = sp.points();
    System r(base.space(), base.nvars(), strict);
    for (int i = 0; i < r.num_objects(); ++i)
        for (int x = 0; x < pts; ++x) r.set_fiber(i, x, fibers[static_cast<size_t>(i * pts + x)]);
    for (const auto& [i, j] : r.pairs())
        for (int x = 0; x < pts; ++x) {
            if (!r.domain(i, j, x)) continue;
            const Matrix* a = domain_a.phi(i, j, x);
            const Matrix* b = domain_b.phi(i, j, x);
            if (!a || !b) throw std::logic_error("transport: map missing on the common domain");
            r.set_phi(i, j, x, out(j, x, *a * in(i, x)));
        }
    for (int g = 0; g < sp.group()->order(); ++g)
        for (int i = 0; i < r.num_objects(); ++i)
            for (int x = 0; x < pts; ++x) {
                int gi = sp.act_partition(g, i), gx = sp.act(g, x);
                r.set_rho(g, i, x, out(gi, gx, base.rho(g, i, x) * in(i, x)));
            }
    return r;
}

}  // namespace

System kernel(const System& src, const System& dst, const SystemMorphism& f) {
    const StratSpace& sp = src.sp();
    int pts = sp.points();
    std::vector<Matrix> bases;
    std::vector<WeightedSpace> fibers;
    for (int i = 0; i < src.num_objects(); ++i)
        for (int x = 0; x < pts; ++x) {
            auto ker = kernel_basis(f.m[static_cast<size_t>(i)][static_cast<size_t>(x)]);
            const auto& v = src.fiber(i, x);
            Matrix b(v.dim(), static_cast<int>(ker.size()));
            WeightedSpace w(v.nvars, {});
            for (size_t c = 0; c < ker.size(); ++c) {
                // The last entry of a kernel vector sits at its non-pivot column.
                w.basis.push_back(v.basis[static_cast<size_t>(ker[c].back().first)]);
                b.set_col(static_cast<int>(c), ker[c]);
            }
            bases.push_back(std::move(b));
            fibers.push_back(std::move(w));
        }
    auto in = [&](int i, int x) -> const Matrix& { return bases[static_cast<size_t>(i * pts + x)]; };
    auto out = [&](int j, int x, const Matrix& m) { return solve_in_basis(in(j, x), m); };
    return transport(src, src.strict() && dst.strict(), fibers, in, out, src, src);
}

System cokernel(const System& src, const System& dst, const SystemMorphism& f) {
    const StratSpace& sp = dst.sp();
    int pts = sp.points();
    std::vector<Matrix> incl, proj;
    std::vector<WeightedSpace> fibers;
    for (int i = 0; i < dst.num_objects(); ++i)
        for (int x = 0; x < pts; ++x) {
            const Matrix& m = f.m[static_cast<size_t>(i)][static_cast<size_t>(x)];
            const auto& v = dst.fiber(i, x);
            EchelonBasis e;
            for (int c = 0; c < m.cols(); ++c) e.insert(m.col(c));
            std::vector<int> keep;
            for (int r = 0; r < v.dim(); ++r)
                if (e.insert(SparseVec{{r, Rational(1)}}, SparseVec{{static_cast<int>(keep.size()), Rational(1)}}))
                    keep.push_back(r);
            int q = static_cast<int>(keep.size());
            Matrix in(v.dim(), q), pr(q, v.dim());
            WeightedSpace w(v.nvars, {});
            for (int c = 0; c < q; ++c) {
                in.set(keep[static_cast<size_t>(c)], c, Rational(1));
                w.basis.push_back(v.basis[static_cast<size_t>(keep[static_cast<size_t>(c)])]);
            }
            for (int r = 0; r < v.dim(); ++r) pr.set_col(r, e.reduce(SparseVec{{r, Rational(1)}}).coords);
            incl.push_back(std::move(in));
            proj.push_back(std::move(pr));
            fibers.push_back(std::move(w));
        }
    auto in = [&](int i, int x) -> const Matrix& { return incl[static_cast<size_t>(i * pts + x)]; };
    auto out = [&](int j, int x, const Matrix& m) { return proj[static_cast<size_t>(j * pts + x)] * m; };
    // The quotient map is defined where both source and target maps are.
    const System& narrow = src.strict() ? dst : src;
    return transport(dst, src.strict() && dst.strict(), fibers, in, out, dst, narrow);
}

System direct_sum(const System& a, const System& b) {
    if (a.strict() != b.strict()) throw std::invalid_argument("direct_sum: strictness differs");
    const StratSpace& sp = a.sp();
    System r(a.space(), a.nvars(), a.strict());
    for (int i = 0; i < r.num_objects(); ++i)
        for (int x = 0; x < sp.points(); ++x) r.set_fiber(i, x, direct_sum(a.fiber(i, x), b.fiber(i, x)));
    for (const auto& [i, j] : r.pairs())
        for (int x = 0; x < sp.points(); ++x)
            if (r.domain(i, j, x)) r.set_phi(i, j, x, Matrix::direct_sum(*a.phi(i, j, x), *b.phi(i, j, x)));
    for (int g = 0; g < sp.group()->order(); ++g)
        for (int i = 0; i < r.num_objects(); ++i)
            for (int x = 0; x < sp.points(); ++x)
                r.set_rho(g, i, x, Matrix::direct_sum(a.rho(g, i, x), b.rho(g, i, x)));
    return r;
}

System parity_shifted(const System& a) {
    System r = a;
    for (int i = 0; i < r.num_objects(); ++i)
        for (int x = 0; x < r.sp().points(); ++x) r.set_fiber(i, x, a.fiber(i, x).shifted());
    return r;
}

}  // namespace pleth
