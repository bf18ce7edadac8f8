#include "pleth/mainthm/bridge.hpp"

#include "pleth/treecx/tree.hpp"

namespace pleth {

ClassFunction gn_class_from_trees(const RepSequence& reps, int n, int nvars) {
    ClassFunction out(n);
    auto trees = enumerate_trees(n);
    for (size_t c = 0; c < out.classes().size(); ++c) {
        Permutation s = permutation_of_type(out.classes()[c]);
        LaurentPoly acc(nvars);
        for (const auto& t : trees) {
            if (!(t.act(s) == t)) continue;
            SetPartition a = t.leaves_partition();
            LaurentPoly tr = supertrace(block_tensor_fiber(reps, a, nvars), block_tensor_map(reps, a, s));
            if ((t.k() + sign_l(t, s)) % 2) tr = -tr;
            acc += tr;
        }
        out.at(c) = RatFun(acc);
    }
    return out;
}

namespace {

// Representation on the direct sum of all fibers of a sheaf.
WeightedSheaf pushforward_to_point(const WeightedSheaf& f) {
    const auto& G = *f.group();
    WeightedSpace total = WeightedSpace::zero(f.nvars());
    std::vector<int> off;
    for (int p = 0; p < f.points(); ++p) {
        off.push_back(total.dim());
        total = direct_sum(total, f.fiber(p));
    }
    std::vector<Matrix> rho;
    for (int g = 0; g < G.order(); ++g) {
        Matrix m(total.dim(), total.dim());
        for (int p = 0; p < f.points(); ++p) {
            const Matrix& b = f.map(g, p);
            int row0 = off[static_cast<size_t>(f.act(g, p))];
            for (int j = 0; j < b.cols(); ++j) {
                SparseVec col = b.col(j);
                for (auto& e : col) e.first += row0;
                m.set_col(off[static_cast<size_t>(p)] + j, std::move(col));
            }
        }
        rho.push_back(std::move(m));
    }
    return WeightedSheaf::on_point(f.group(), std::move(total), std::move(rho));
}

}  // namespace

WeightedSheaf gn_representation(const RepSequence& reps, int n, int nvars) {
    RepSequence g;
    for (int m = 1; m <= n; ++m) {
        auto G = symmetric_group(m);
        WeightedSheaf acc = m <= static_cast<int>(reps.size()) && reps[static_cast<size_t>(m - 1)].group()
                                ? reps[static_cast<size_t>(m - 1)]
                                : WeightedSheaf::trivial_on_point(G, WeightedSpace::zero(nvars));
        WeightedSheaf rest = WeightedSheaf::trivial_on_point(G, WeightedSpace::zero(nvars));
        for (const auto& lambda : enumerate_int_partitions(m)) {
            if (lambda.length() < 2) continue;
            rest = direct_sum(rest, pushforward_to_point(f_lambda(g, lambda, nvars)));
        }
        g.push_back(direct_sum(acc, rest.shifted()));
    }
    return g.back();
}

ClassFunction gn_class_inductive(const RepSequence& reps, int n, int nvars) {
    return kclass(gn_representation(reps, n, nvars));
}

Report verify_bridge(const RepSequence& reps, int n, int nvars) {
    Report rep("bridge");
    ClassFunction a = gn_class_from_trees(reps, n, nvars);
    ClassFunction b = gn_class_inductive(reps, n, nvars);
    for (size_t c = 0; c < a.classes().size(); ++c)
        rep.expect(a.at(c) == b.at(c), "class " + a.classes()[c].str() + ": trees " + a.at(c).str() + " vs inductive " +
                                           b.at(c).str());
    return rep;
}

}  // namespace pleth
