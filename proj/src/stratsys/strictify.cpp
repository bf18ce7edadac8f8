#include "pleth/stratsys/strictify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pleth/coeffring/linalg.hpp"

namespace pleth {

std::vector<int> orbit_of(const StratSpace& sp, int alpha) {
    std::set<int> o;
    for (int g = 0; g < sp.group()->order(); ++g) o.insert(sp.act_partition(g, alpha));
    return {o.begin(), o.end()};
}

namespace {

// Fiberwise images at every point whose type lies in `types`. basis[i][x] has
// columns spanning the image inside s.fiber(i, x).
struct Images {
    std::vector<std::vector<Matrix>> basis;
    std::vector<std::vector<WeightedSpace>> fiber;
};

Images images(const System& s, const std::vector<int>& types) {
    const StratSpace& sp = s.sp();
    const auto& pix = sp.partitions();
    int pts = sp.points();
    Images im;
    im.basis.assign(static_cast<size_t>(s.num_objects()), std::vector<Matrix>(static_cast<size_t>(pts)));
    im.fiber.assign(static_cast<size_t>(s.num_objects()),
                    std::vector<WeightedSpace>(static_cast<size_t>(pts), WeightedSpace::zero(s.nvars())));
    for (int i = 0; i < s.num_objects(); ++i)
        for (int x = 0; x < pts; ++x) {
            int a = sp.type(x);
            const auto& v = s.fiber(i, x);
            Matrix& b = im.basis[static_cast<size_t>(i)][static_cast<size_t>(x)];
            WeightedSpace& w = im.fiber[static_cast<size_t>(i)][static_cast<size_t>(x)];
            b = Matrix(v.dim(), 0);
            if (std::find(types.begin(), types.end(), a) == types.end()) continue;
            std::vector<SparseVec> cols;
            std::vector<BasisVector> weights;
            for (int k = 0; k < s.num_objects(); ++k) {
                if (!pix.refines(k, i) || !pix.sim(k, i, a)) continue;
                const Matrix* m = s.phi(k, i, x);
                if (!m) throw std::logic_error("functor_d: phi missing on U_alpha");
                for (int c = 0; c < m->cols(); ++c) {
                    cols.push_back(m->col(c));
                    weights.push_back(s.fiber(k, x).basis[static_cast<size_t>(c)]);
                }
            }
            EchelonBasis e;
            std::vector<int> keep;
            for (size_t c = 0; c < cols.size(); ++c)
                if (e.insert(cols[c])) keep.push_back(static_cast<int>(c));
            b = Matrix(v.dim(), static_cast<int>(keep.size()));
            for (size_t c = 0; c < keep.size(); ++c) {
                b.set_col(static_cast<int>(c), cols[static_cast<size_t>(keep[c])]);
                w.basis.push_back(weights[static_cast<size_t>(keep[c])]);
            }
        }
    return im;
}

System build_d(const System& s, const std::vector<int>& types, bool with_rho) {
    const StratSpace& sp = s.sp();
    const auto& pix = sp.partitions();
    int pts = sp.points();
    Images im = images(s, types);
    auto B = [&](int i, int x) -> const Matrix& { return im.basis[static_cast<size_t>(i)][static_cast<size_t>(x)]; };
    System d(s.space(), s.nvars(), true);
    for (int i = 0; i < d.num_objects(); ++i)
        for (int x = 0; x < pts; ++x) d.set_fiber(i, x, im.fiber[static_cast<size_t>(i)][static_cast<size_t>(x)]);
    for (const auto& [i, j] : d.pairs())
        for (int x = 0; x < pts; ++x) {
            int a = sp.type(x);
            Matrix m(d.fiber(j, x).dim(), d.fiber(i, x).dim());
            if (m.rows() > 0 && m.cols() > 0 && pix.sim(i, j, a)) m = solve_in_basis(B(j, x), *s.phi(i, j, x) * B(i, x));
            d.set_phi(i, j, x, std::move(m));
        }
    if (with_rho)
        for (int g = 0; g < sp.group()->order(); ++g)
            for (int i = 0; i < d.num_objects(); ++i)
                for (int x = 0; x < pts; ++x) {
                    int gi = sp.act_partition(g, i), gx = sp.act(g, x);
                    Matrix m(d.fiber(gi, gx).dim(), d.fiber(i, x).dim());
                    if (m.rows() > 0 && m.cols() > 0) m = solve_in_basis(B(gi, gx), s.rho(g, i, x) * B(i, x));
                    d.set_rho(g, i, x, std::move(m));
                }
    return d;
}

}  // namespace

System functor_d(const System& s, int alpha) { return build_d(s, {alpha}, false); }

System functor_d_tilde(const System& s, int alpha) { return build_d(s, orbit_of(s.sp(), alpha), true); }

SystemMorphism morphism_i_tilde(const System& s, const System& dt, int alpha) {
    const StratSpace& sp = s.sp();
    auto orbit = orbit_of(sp, alpha);
    Images im = images(s, orbit);
    SystemMorphism f;
    f.m.resize(static_cast<size_t>(s.num_objects()));
    for (int i = 0; i < s.num_objects(); ++i)
        for (int x = 0; x < sp.points(); ++x) {
            Matrix m(dt.fiber(i, x).dim(), s.fiber(i, x).dim());
            if (m.rows() > 0)
                m = solve_in_basis(im.basis[static_cast<size_t>(i)][static_cast<size_t>(x)],
                                   Matrix::identity(s.fiber(i, x).dim()));
            f.m[static_cast<size_t>(i)].push_back(std::move(m));
        }
    return f;
}

int support_measure(const System& s, int alpha) {
    const StratSpace& sp = s.sp();
    bool nonzero = false, outside = false;
    for (int x : s.support()) {
        if (!sp.in_u(x, alpha)) continue;
        nonzero = true;
        if (sp.type(x) != alpha) outside = true;
    }
    if (!nonzero) return 0;
    return outside ? kInfiniteMeasure : 1;
}

namespace {

// First index in canonical order among the refinement-minimal ones with
// nonzero measure.
int choose_alpha(const System& s) {
    const auto& pix = s.sp().partitions();
    std::vector<int> live;
    for (int a = 0; a < pix.count(); ++a)
        if (support_measure(s, a) != 0) live.push_back(a);
    for (int a : live) {
        bool minimal = true;
        for (int b : live) minimal = minimal && (b == a || !pix.refines(b, a));
        if (minimal) return a;
    }
    return -1;
}

bool strictly_inside(const std::vector<int>& small, const std::vector<int>& big) {
    return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

StrictifyResult strictify(const System& s) {
    StrictifyResult res;
    res.report = Report("strictify");
    const auto& pix = s.sp().partitions();
    std::vector<std::pair<System, int>> work{{s, 1}};
    int guard = 4 * s.sp().points() * pix.count() + 16;
    while (!work.empty()) {
        auto [cur, sign] = std::move(work.back());
        work.pop_back();
        auto supp = cur.support();
        if (supp.empty()) continue;
        if (++res.steps > guard) {
            res.report.fail("recursion guard exceeded");
            break;
        }
        int a = choose_alpha(cur);
        if (a < 0) {
            res.report.fail("no alpha with nonzero measure on a nonzero system");
            break;
        }
        res.report.expect(support_measure(cur, a) == 1, "minimal alpha " + pix.at(a).str() + " has measure != 1");
        System dt = functor_d_tilde(cur, a);
        SystemMorphism it = morphism_i_tilde(cur, dt, a);
        Report strict = check_system(dt);
        res.report.expect(strict.pass, "D~ at " + pix.at(a).str() + ": " + strict.witness);
        Report mor = check_morphism(cur, dt, it);
        res.report.expect(mor.pass, "I~ at " + pix.at(a).str() + ": " + mor.witness);
        System ker = kernel(cur, dt, it);
        System cok = cokernel(cur, dt, it);
        bool shrink = strictly_inside(ker.support(), supp) && strictly_inside(cok.support(), supp);
        bool ok = res.report.expect(shrink, "support did not shrink at " + pix.at(a).str());
        res.entries.push_back({std::move(dt), sign, a});
        if (!ok) break;
        if (!ker.is_zero()) work.emplace_back(std::move(ker), sign);
        if (!cok.is_zero()) work.emplace_back(std::move(cok), -sign);
    }
    res.report.info["steps"] = std::to_string(res.steps);
    res.report.info["entries"] = std::to_string(res.entries.size());
    return res;
}

System assemble_strict(const SpacePtr& space, int nvars, const std::vector<SignedEntry>& entries) {
    System acc(space, nvars, true);
    for (const auto& e : entries) {
        System piece = e.multiplicity < 0 ? parity_shifted(e.system) : e.system;
        for (int c = 0; c < std::abs(e.multiplicity); ++c) acc = direct_sum(acc, piece);
    }
    return acc;
}

KTraces k_traces(const System& s) {
    const StratSpace& sp = s.sp();
    KTraces out;
    for (int g = 0; g < sp.group()->order(); ++g)
        for (int i = 0; i < s.num_objects(); ++i) {
            if (sp.act_partition(g, i) != i) continue;
            for (int x = 0; x < sp.points(); ++x)
                if (sp.act(g, x) == x) out[{i, x, g}] = supertrace(s.fiber(i, x), s.rho(g, i, x));
        }
    return out;
}

KTraces k_traces(const std::vector<SignedEntry>& entries) {
    KTraces out;
    for (const auto& e : entries)
        for (auto& [k, v] : k_traces(e.system)) {
            LaurentPoly w = v;
            w *= Rational(e.multiplicity);
            out[k] += w;
        }
    return out;
}

std::string compare_traces(const StratSpace& sp, const KTraces& a, const KTraces& b) {
    auto get = [](const KTraces& t, const std::tuple<int, int, int>& k) {
        auto it = t.find(k);
        return it == t.end() ? LaurentPoly() : it->second;
    };
    std::set<std::tuple<int, int, int>> keys;
    for (const auto& [k, v] : a) keys.insert(k);
    for (const auto& [k, v] : b) keys.insert(k);
    for (const auto& k : keys) {
        LaurentPoly x = get(a, k), y = get(b, k);
        if (!((x - y).is_zero())) {
            auto [i, p, g] = k;
            return "object " + sp.partitions().at(i).str() + " point " + sp.point_str(p) + " sigma " +
                   sp.group()->at(g).str() + ": " + x.str() + " vs " + y.str();
        }
    }
    return {};
}

}  // namespace pleth
