#include "pleth/equirep/locexp.hpp"

#include <algorithm>
#include <numeric>

namespace pleth {

namespace {

bool has_rep(const RepSequence& reps, int m) {
    return m >= 1 && m <= static_cast<int>(reps.size()) && reps[static_cast<size_t>(m - 1)].group() != nullptr;
}

const WeightedSheaf* rep_at(const RepSequence& reps, int m) {
    return has_rep(reps, m) ? &reps[static_cast<size_t>(m - 1)] : nullptr;
}

}  // namespace

WeightedSpace block_tensor_fiber(const RepSequence& reps, const SetPartition& a, int nvars) {
    std::vector<WeightedSpace> fs;
    for (const auto& b : a.blocks()) {
        const auto* r = rep_at(reps, b.size());
        fs.push_back(r ? r->fiber(0) : WeightedSpace::zero(nvars));
    }
    return tensor_all(fs, nvars);
}

Matrix block_tensor_map(const RepSequence& reps, const SetPartition& a, const Permutation& s) {
    const auto& blocks = a.blocks();
    auto target = a.act(s);
    std::vector<WeightedSpace> fs;
    Matrix m = Matrix::identity(1);
    for (const auto& b : blocks) {
        const auto* r = rep_at(reps, b.size());
        if (!r) {
            fs.push_back(WeightedSpace::zero(0));
            m = m.kron(Matrix(0, 0));
            continue;
        }
        fs.push_back(r->fiber(0));
        auto tau = induced_on_block(s, b);
        m = m.kron(r->map(r->group()->index_of(tau), 0));
    }
    std::vector<int> order(blocks.size());
    for (size_t j = 0; j < blocks.size(); ++j) {
        auto img = s.apply(blocks[j]);
        size_t k = static_cast<size_t>(std::find(target.blocks().begin(), target.blocks().end(), img) -
                                       target.blocks().begin());
        order[k] = static_cast<int>(j);
    }
    return koszul_reorder(fs, order) * m;
}

std::vector<SetPartition> partitions_of_type(const IntPartition& lambda) {
    std::vector<SetPartition> out;
    for (auto& p : enumerate_set_partitions(lambda.size()))
        if (p.type() == lambda) out.push_back(std::move(p));
    return out;
}

WeightedSheaf f_lambda(const RepSequence& reps, const IntPartition& lambda, int nvars) {
    int n = lambda.size();
    auto G = symmetric_group(n);
    auto carrier = partitions_of_type(lambda);
    std::vector<WeightedSpace> fibers;
    for (const auto& a : carrier) fibers.push_back(block_tensor_fiber(reps, a, nvars));
    std::vector<std::vector<int>> act(static_cast<size_t>(G->order()));
    std::vector<std::vector<Matrix>> maps(static_cast<size_t>(G->order()));
    for (int g = 0; g < G->order(); ++g)
        for (const auto& a : carrier) {
            auto b = a.act(G->at(g));
            act[static_cast<size_t>(g)].push_back(
                static_cast<int>(std::find(carrier.begin(), carrier.end(), b) - carrier.begin()));
            maps[static_cast<size_t>(g)].push_back(block_tensor_map(reps, a, G->at(g)));
        }
    return {G, nvars, std::move(act), std::move(fibers), std::move(maps)};
}

ClassFunction QuotientPresentation::alpha(int n) const {
    ClassFunction c(n);
    const auto* r = rep_at(F, n);
    if (!r) return c;
    RatFun d(D.character());
    if (d.is_zero()) throw UnitError("[D] = 0 is not a unit");
    for (size_t i = 0; i < c.classes().size(); ++i)
        c.at(i) = RatFun(r->trace(permutation_of_type(c.classes()[i]))) / d;
    return c;
}

KClassSeries QuotientPresentation::classes(int N) const {
    KClassSeries s(N);
    for (int n = 1; n <= N; ++n) s[n] = alpha(n);
    return s;
}

ClassFunction alpha_lambda(const QuotientPresentation& p, const IntPartition& lambda) {
    int n = lambda.size();
    ClassFunction out(n);
    if (p.D.character().is_zero()) throw UnitError("[D] = 0 is not a unit");
    for (int m : lambda.parts())
        if (!has_rep(p.F, m)) return out;
    auto a = partitions_of_type(lambda).front();
    auto H = PermGroup::stabilizer(a);
    RepSequence dreps;
    for (int m = 1; m <= n; ++m) dreps.push_back(WeightedSheaf::trivial_on_point(symmetric_group(m), p.D));
    auto fF = block_tensor_fiber(p.F, a, p.nvars);
    auto fD = block_tensor_fiber(dreps, a, p.nvars);
    // Trace quotient on H, keyed by element index.
    std::vector<RatFun> q(static_cast<size_t>(H.order()));
    for (int h = 0; h < H.order(); ++h) {
        LaurentPoly td = supertrace(fD, block_tensor_map(dreps, a, H.at(h)));
        if (td.is_zero()) throw UnitError("trace of the D tensor vanishes at " + H.at(h).str());
        q[static_cast<size_t>(h)] = RatFun(supertrace(fF, block_tensor_map(p.F, a, H.at(h)))) / RatFun(td);
    }
    const auto& G = *symmetric_group(n);
    for (size_t i = 0; i < out.classes().size(); ++i) {
        auto s = permutation_of_type(out.classes()[i]);
        RatFun sum;
        for (const auto& x : G.elements()) {
            auto c = x.inverse() * s * x;
            if (H.contains(c)) sum += q[static_cast<size_t>(H.index_of(c))];
        }
        out.at(i) = sum * RatFun(Rational(1, H.order()));
    }
    return out;
}

KClassSeries loc_exp(const QuotientPresentation& p, int N) {
    KClassSeries s(N);
    for (int n = 1; n <= N; ++n)
        for (const auto& lambda : enumerate_int_partitions(n)) s[n] += alpha_lambda(p, lambda);
    return s;
}

CharacterLemmaResult verify_character_lemma(const QuotientPresentation& p, int N) {
    CharacterLemmaResult r{Report("charlemma"), QSeries(N), QSeries(N)};
    r.lhs = loc_exp(p, N).invariant_series(RatFun(1));
    r.rhs = plethystic_exp(p.classes(N).invariant_series());
    int k = QSeries::first_mismatch(r.lhs, r.rhs);
    r.report.expect(k < 0, k < 0 ? "" : "coefficient of q^" + std::to_string(k) + " differs");
    return r;
}

}  // namespace pleth
