#include "pleth/equirep/sheaf.hpp"

#include <stdexcept>

#include "pleth/coeffring/linalg.hpp"

namespace pleth {

WeightedSheaf::WeightedSheaf(GroupPtr group, int nvars, std::vector<std::vector<int>> act,
                             std::vector<WeightedSpace> fibers, std::vector<std::vector<Matrix>> maps)
    : group_(std::move(group)), nvars_(nvars), act_(std::move(act)), fibers_(std::move(fibers)),
      maps_(std::move(maps)) {
    if (!group_) throw std::invalid_argument("sheaf without group");
    if (static_cast<int>(act_.size()) != group_->order() || static_cast<int>(maps_.size()) != group_->order())
        throw std::invalid_argument("sheaf tables do not match group order");
    for (int g = 0; g < group_->order(); ++g) {
        if (act_[static_cast<size_t>(g)].size() != fibers_.size() || maps_[static_cast<size_t>(g)].size() != fibers_.size())
            throw std::invalid_argument("sheaf tables do not match carrier size");
    }
    for (auto& f : fibers_) f.nvars = nvars_;
}

WeightedSheaf WeightedSheaf::on_point(GroupPtr group, WeightedSpace fiber, std::vector<Matrix> rho) {
    int nv = fiber.nvars;
    int order = group->order();
    std::vector<std::vector<int>> act(static_cast<size_t>(order), std::vector<int>{0});
    std::vector<std::vector<Matrix>> maps;
    if (static_cast<int>(rho.size()) != order) throw std::invalid_argument("one matrix per group element expected");
    for (auto& m : rho) {
        if (m.rows() != fiber.dim() || m.cols() != fiber.dim()) throw std::invalid_argument("matrix size mismatch");
        maps.push_back({std::move(m)});
    }
    WeightedSheaf f(std::move(group), nv, std::move(act), {std::move(fiber)}, std::move(maps));
    if (auto e = f.check(); !e.empty()) throw std::invalid_argument(e);
    return f;
}

WeightedSheaf WeightedSheaf::trivial_on_point(GroupPtr group, WeightedSpace fiber) {
    std::vector<Matrix> rho(static_cast<size_t>(group->order()), Matrix::identity(fiber.dim()));
    return on_point(std::move(group), std::move(fiber), std::move(rho));
}

int WeightedSheaf::total_dim() const {
    int d = 0;
    for (const auto& f : fibers_) d += f.dim();
    return d;
}

std::string WeightedSheaf::check() const {
    const auto& G = *group_;
    int np = points();
    for (int p = 0; p < np; ++p) {
        if (act(0, p) != p) return "identity moves point " + std::to_string(p);
        if (!(map(0, p) == Matrix::identity(fiber(p).dim()))) return "identity map at point " + std::to_string(p);
    }
    for (int g = 0; g < G.order(); ++g)
        for (int p = 0; p < np; ++p) {
            int q = act(g, p);
            if (q < 0 || q >= np) return "action leaves carrier";
            const Matrix& m = map(g, p);
            if (!is_homogeneous(m, fiber(p), fiber(q)))
                return "map of " + G.at(g).str() + " at point " + std::to_string(p) + " is not homogeneous";
        }
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            int gh = G.mul(g, h);
            for (int p = 0; p < np; ++p) {
                int hp = act(h, p);
                if (act(gh, p) != act(g, hp)) return "action is not a group action";
                if (!(map(gh, p) == map(g, hp) * map(h, p)))
                    return "cocycle fails for " + G.at(g).str() + ", " + G.at(h).str() + " at point " +
                           std::to_string(p);
            }
        }
    return {};
}

LaurentPoly WeightedSheaf::trace_at(int g) const {
    LaurentPoly t(nvars_);
    for (int p = 0; p < points(); ++p)
        if (act(g, p) == p) t += supertrace(fiber(p), map(g, p));
    return t;
}

LaurentPoly WeightedSheaf::trace(const Permutation& s) const { return trace_at(group_->index_of(s)); }

WeightedSheaf WeightedSheaf::shifted() const {
    WeightedSheaf r = *this;
    for (auto& f : r.fibers_) f = f.shifted();
    return r;
}

WeightedSheaf WeightedSheaf::sign_twisted() const {
    WeightedSheaf r = *this;
    for (int g = 0; g < group_->order(); ++g)
        if (group_->at(g).sign() < 0)
            for (auto& m : r.maps_[static_cast<size_t>(g)]) m = m.scaled(-1);
    return r;
}

namespace {

void require_same_carrier(const WeightedSheaf& f, const WeightedSheaf& g) {
    if (f.group() != g.group() && !(f.group()->elements() == g.group()->elements()))
        throw std::invalid_argument("sheaves over different groups");
    if (f.points() != g.points()) throw std::invalid_argument("sheaves over different carriers");
    for (int h = 0; h < f.group()->order(); ++h)
        for (int p = 0; p < f.points(); ++p)
            if (f.act(h, p) != g.act(h, p)) throw std::invalid_argument("sheaves over different carriers");
}

std::vector<std::vector<int>> action_table(const WeightedSheaf& f) {
    std::vector<std::vector<int>> act(static_cast<size_t>(f.group()->order()));
    for (int h = 0; h < f.group()->order(); ++h)
        for (int p = 0; p < f.points(); ++p) act[static_cast<size_t>(h)].push_back(f.act(h, p));
    return act;
}

}  // namespace

WeightedSheaf tensor(const WeightedSheaf& f, const WeightedSheaf& g) {
    require_same_carrier(f, g);
    int nv = std::max(f.nvars(), g.nvars());
    std::vector<WeightedSpace> fibers;
    for (int p = 0; p < f.points(); ++p) fibers.push_back(tensor(f.fiber(p), g.fiber(p)));
    std::vector<std::vector<Matrix>> maps(static_cast<size_t>(f.group()->order()));
    for (int h = 0; h < f.group()->order(); ++h)
        for (int p = 0; p < f.points(); ++p) maps[static_cast<size_t>(h)].push_back(f.map(h, p).kron(g.map(h, p)));
    return {f.group(), nv, action_table(f), std::move(fibers), std::move(maps)};
}

WeightedSheaf direct_sum(const WeightedSheaf& f, const WeightedSheaf& g) {
    require_same_carrier(f, g);
    int nv = std::max(f.nvars(), g.nvars());
    std::vector<WeightedSpace> fibers;
    for (int p = 0; p < f.points(); ++p) fibers.push_back(direct_sum(f.fiber(p), g.fiber(p)));
    std::vector<std::vector<Matrix>> maps(static_cast<size_t>(f.group()->order()));
    for (int h = 0; h < f.group()->order(); ++h)
        for (int p = 0; p < f.points(); ++p)
            maps[static_cast<size_t>(h)].push_back(Matrix::direct_sum(f.map(h, p), g.map(h, p)));
    return {f.group(), nv, action_table(f), std::move(fibers), std::move(maps)};
}

WeightedSheaf induce(const WeightedSheaf& f, const WeightedSheaf::GroupPtr& big) {
    const PermGroup& H = *f.group();
    const PermGroup& G = *big;
    if (!H.is_subgroup_of(G)) throw std::invalid_argument("induce: not a subgroup");
    // Left cosets gH, each with its first representative in group order.
    std::vector<int> coset_of(static_cast<size_t>(G.order()), -1), reps;
    for (int g = 0; g < G.order(); ++g) {
        if (coset_of[static_cast<size_t>(g)] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (const auto& h : H.elements()) coset_of[static_cast<size_t>(G.index_of(G.at(g) * h))] = c;
    }
    int nc = static_cast<int>(reps.size());
    int np = f.points();
    std::vector<WeightedSpace> fibers;
    for (int c = 0; c < nc; ++c)
        for (int p = 0; p < np; ++p) fibers.push_back(f.fiber(p));
    std::vector<std::vector<int>> act(static_cast<size_t>(G.order()));
    std::vector<std::vector<Matrix>> maps(static_cast<size_t>(G.order()));
    for (int s = 0; s < G.order(); ++s)
        for (int c = 0; c < nc; ++c) {
            int sr = G.mul(s, reps[static_cast<size_t>(c)]);
            int c2 = coset_of[static_cast<size_t>(sr)];
            int h = H.index_of(G.at(G.inv(reps[static_cast<size_t>(c2)])) * G.at(sr));
            for (int p = 0; p < np; ++p) {
                act[static_cast<size_t>(s)].push_back(c2 * np + f.act(h, p));
                maps[static_cast<size_t>(s)].push_back(f.map(h, p));
            }
        }
    return {big, f.nvars(), std::move(act), std::move(fibers), std::move(maps)};
}

WeightedSheaf restrict(const WeightedSheaf& f, const WeightedSheaf::GroupPtr& small) {
    const PermGroup& G = *f.group();
    if (!small->is_subgroup_of(G)) throw std::invalid_argument("restrict: not a subgroup");
    std::vector<std::vector<int>> act;
    std::vector<std::vector<Matrix>> maps;
    std::vector<WeightedSpace> fibers;
    for (int p = 0; p < f.points(); ++p) fibers.push_back(f.fiber(p));
    for (const auto& s : small->elements()) {
        int g = G.index_of(s);
        std::vector<int> row;
        std::vector<Matrix> mrow;
        for (int p = 0; p < f.points(); ++p) {
            row.push_back(f.act(g, p));
            mrow.push_back(f.map(g, p));
        }
        act.push_back(std::move(row));
        maps.push_back(std::move(mrow));
    }
    return {small, f.nvars(), std::move(act), std::move(fibers), std::move(maps)};
}

WeightedSpace invariants(const WeightedSheaf& f) {
    const PermGroup& G = *f.group();
    std::vector<int> offset(static_cast<size_t>(f.points()) + 1, 0);
    for (int p = 0; p < f.points(); ++p)
        offset[static_cast<size_t>(p) + 1] = offset[static_cast<size_t>(p)] + f.fiber(p).dim();
    int total = offset.back();
    // Sum of the group action on the total space; its image is the invariant
    // subspace and its columns stay weight-homogeneous.
    Matrix avg(total, total);
    for (int g = 0; g < G.order(); ++g)
        for (int p = 0; p < f.points(); ++p) {
            const Matrix& m = f.map(g, p);
            int q = f.act(g, p);
            for (int j = 0; j < m.cols(); ++j) {
                int col = offset[static_cast<size_t>(p)] + j;
                SparseVec v;
                for (const auto& [i, a] : m.col(j)) v.emplace_back(offset[static_cast<size_t>(q)] + i, a);
                avg.set_col(col, axpy(avg.col(col), 1, v));
            }
        }
    WeightedSpace out(f.nvars(), {});
    std::vector<BasisVector> all;
    for (int p = 0; p < f.points(); ++p)
        for (const auto& b : f.fiber(p).basis) all.push_back(b);
    for (int j : pivot_columns(avg)) out.basis.push_back(all[static_cast<size_t>(j)]);
    return out;
}

}  // namespace pleth
