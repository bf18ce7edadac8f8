#include "pleth/stratsys/datum.hpp"

#include <algorithm>
#include <map>

#include "pleth/equirep/random.hpp"

namespace pleth {

int LocalDatum::max_degree() const {
    size_t m = 0;
    for (const auto& r : reps) m = std::max(m, r.size());
    return static_cast<int>(m);
}

const WeightedSheaf* LocalDatum::v(int p, int m) const {
    const auto& r = reps[static_cast<size_t>(p)];
    if (m < 1 || m > static_cast<int>(r.size())) return nullptr;
    const auto& s = r[static_cast<size_t>(m - 1)];
    return s.group() ? &s : nullptr;
}

namespace {

SetPartition local_blocks(const StratSpace& sp, int i, int x) {
    const auto& pix = sp.partitions();
    return pix.at(pix.meet(i, sp.type(x)));
}

int point_of_block(const StratSpace& sp, int x, const Subset& k) {
    return sp.coords(x)[static_cast<size_t>(k.min_element() - 1)];
}

}  // namespace

System system_from_local_datum(const LocalDatum& d, const SpacePtr& space) {
    const StratSpace& sp = *space;
    const auto& G = *sp.group();
    System s(space, d.nvars, false);
    int pts = sp.points();
    for (int i = 0; i < s.num_objects(); ++i)
        for (int x = 0; x < pts; ++x) {
            std::vector<WeightedSpace> fs;
            SetPartition blocks = local_blocks(sp, i, x);
            for (const auto& k : blocks.blocks()) {
                const auto* v = d.v(point_of_block(sp, x, k), k.size());
                fs.push_back(v ? v->fiber(0) : WeightedSpace::zero(d.nvars));
            }
            s.set_fiber(i, x, tensor_all(fs, d.nvars));
        }
    for (const auto& [i, j] : s.pairs())
        for (int x = 0; x < pts; ++x)
            if (s.domain(i, j, x)) s.set_phi(i, j, x, Matrix::identity(s.fiber(i, x).dim()));
    for (int g = 0; g < G.order(); ++g) {
        const Permutation& sg = G.at(g);
        for (int i = 0; i < s.num_objects(); ++i)
            for (int x = 0; x < pts; ++x) {
                int dim = s.fiber(i, x).dim();
                if (dim == 0) continue;
                SetPartition blocks = local_blocks(sp, i, x);
                SetPartition target = blocks.act(sg);
                std::vector<WeightedSpace> fs;
                Matrix m = Matrix::identity(1);
                for (const auto& k : blocks.blocks()) {
                    const auto* v = d.v(point_of_block(sp, x, k), k.size());
                    fs.push_back(v->fiber(0));
                    m = m.kron(v->map(v->group()->index_of(induced_on_block(sg, k)), 0));
                }
                std::vector<int> order(blocks.blocks().size());
                for (size_t j = 0; j < order.size(); ++j) {
                    auto img = sg.apply(blocks.blocks()[j]);
                    auto pos = std::find(target.blocks().begin(), target.blocks().end(), img) - target.blocks().begin();
                    order[static_cast<size_t>(pos)] = static_cast<int>(j);
                }
                s.set_rho(g, i, x, koszul_reorder(fs, order) * m);
            }
    }
    return s;
}

LocalDatum structure_datum(const std::vector<XPoint>& xs, int nmax, int nvars) {
    LocalDatum d{nvars, xs, {}};
    for (const auto& p : xs) {
        RepSequence r;
        for (int m = 1; m <= nmax; ++m)
            r.push_back(WeightedSheaf::trivial_on_point(symmetric_group(m), WeightedSpace::line(nvars, p.weight.scaled(m))));
        d.reps.push_back(std::move(r));
    }
    return d;
}

LocalDatum exterior_datum(const std::vector<XPoint>& xs, int nvars) {
    LocalDatum d{nvars, xs, {}};
    for (const auto& p : xs)
        d.reps.push_back({WeightedSheaf::trivial_on_point(symmetric_group(1), WeightedSpace::line(nvars, p.weight))});
    return d;
}

LocalDatum random_datum(Rng& rng, int npoints, int nmax, int nvars, int max_dim) {
    std::vector<Exponent> ws;
    for (int p = 0; p < npoints; ++p) ws.push_back(random_weight(rng, nvars, 1));
    LocalDatum d{nvars, named_points(ws), {}};
    for (int p = 0; p < npoints; ++p) {
        RepSequence r;
        for (int m = 1; m <= nmax; ++m) {
            if (rng.chance(1, 4)) {
                r.emplace_back();
                continue;
            }
            auto line = [&] {
                return subset_rep(m, 0, rng.chance(1, 2), random_weight(rng, nvars, 1), rng.chance(1, 3) ? 1 : 0, nvars);
            };
            WeightedSheaf v = line();
            if (max_dim >= 2 && rng.chance(1, 3)) {
                if (m == 2 && rng.chance(1, 2))
                    v = subset_rep(2, 1, rng.chance(1, 2), random_weight(rng, nvars, 1), rng.chance(1, 3) ? 1 : 0, nvars);
                else
                    v = direct_sum(v, line());
            }
            r.push_back(std::move(v));
        }
        d.reps.push_back(std::move(r));
    }
    return d;
}

namespace {

Matrix random_homogeneous_invertible(const WeightedSpace& v, Rng& rng) {
    int n = v.dim();
    Matrix g(n, n);
    for (int c = 0; c < n; ++c) {
        static const int diag[] = {1, 2, -1, 3};
        g.set(c, c, Rational(diag[rng.below(4)]));
        for (int r = c + 1; r < n; ++r)
            if (v.basis[static_cast<size_t>(r)] == v.basis[static_cast<size_t>(c)]) g.set(r, c, Rational(rng.range(-2, 2)));
    }
    return g;
}

}  // namespace

System gauge(const System& s, Rng& rng) {
    const StratSpace& sp = s.sp();
    int pts = sp.points();
    std::vector<Matrix> g, gi;
    for (int i = 0; i < s.num_objects(); ++i)
        for (int x = 0; x < pts; ++x) {
            g.push_back(random_homogeneous_invertible(s.fiber(i, x), rng));
            gi.push_back(solve_in_basis(g.back(), Matrix::identity(s.fiber(i, x).dim())));
        }
    auto at = [pts](const std::vector<Matrix>& v, int i, int x) -> const Matrix& {
        return v[static_cast<size_t>(i * pts + x)];
    };
    System r = s;
    for (const auto& [i, j] : s.pairs())
        for (int x = 0; x < pts; ++x)
            if (const Matrix* m = s.phi(i, j, x)) r.set_phi(i, j, x, at(g, j, x) * *m * at(gi, i, x));
    for (int h = 0; h < sp.group()->order(); ++h)
        for (int i = 0; i < s.num_objects(); ++i)
            for (int x = 0; x < pts; ++x)
                r.set_rho(h, i, x, at(g, sp.act_partition(h, i), sp.act(h, x)) * s.rho(h, i, x) * at(gi, i, x));
    return r;
}

}  // namespace pleth
