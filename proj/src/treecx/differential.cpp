#include "pleth/treecx/differential.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pleth {

IndexTree ordinary_contraction(const IndexTree& t, const Subset& v) {
    if (!t.is_internal(v) || v == Subset::full(t.n()))
        throw std::invalid_argument("ordinary contraction needs an internal non-root label");
    std::vector<Subset> ls;
    for (const auto& l : t.labels())
        if (!(l == v)) ls.push_back(l);
    return IndexTree(t.n(), std::move(ls));
}

IndexTree exceptional_contraction(const IndexTree& t, const Subset& v) {
    if (!t.is_exceptional(v)) throw std::invalid_argument("exceptional contraction needs an exceptional label");
    std::vector<Subset> ls;
    for (const auto& l : t.labels())
        if (l == v || !l.subset_of(v)) ls.push_back(l);
    return IndexTree(t.n(), std::move(ls));
}

std::vector<Contraction> contractions_of(const IndexTree& t) {
    std::vector<Contraction> out;
    Subset root = Subset::full(t.n());
    for (const auto& v : t.internal_labels()) {
        if (!(v == root)) out.push_back({t, v, ContractionKind::Ordinary, ordinary_contraction(t, v)});
        if (t.is_exceptional(v)) out.push_back({t, v, ContractionKind::Exceptional, exceptional_contraction(t, v)});
    }
    return out;
}

FormalTerm contraction_term(const Contraction& c) {
    int s = sign_s(c.source, c.node);
    SetPartition a = c.source.leaves_partition();
    if (c.kind == ContractionKind::Ordinary) return {a, a, s};
    return {a, c.target.leaves_partition(), -s};
}

Differential differential(int n, int k) {
    if (k < 1 || k > n - 1) throw std::out_of_range("differential: k must be in 1..n-1");
    Differential d;
    d.n = n;
    d.k = k;
    d.sources = enumerate_trees(n, k);
    d.targets = enumerate_trees(n, k - 1);
    for (size_t i = 0; i < d.sources.size(); ++i) {
        std::map<int, std::vector<FormalTerm>> row;
        for (const auto& c : contractions_of(d.sources[i])) {
            auto it = std::lower_bound(d.targets.begin(), d.targets.end(), c.target);
            row[static_cast<int>(it - d.targets.begin())].push_back(contraction_term(c));
        }
        for (auto& [j, terms] : row) d.entries.push_back({static_cast<int>(i), j, std::move(terms)});
    }
    return d;
}

Report check_d_squared(int n) {
    if (n < 1 || n > 7) throw std::out_of_range("check_d_squared: n must be in 1..7");
    Report rep("d_squared");
    TreeIndex ix(n);
    for (const auto& t : ix.all()) {
        std::map<int, long> acc;
        SetPartition a = t.leaves_partition();
        for (const auto& c1 : contractions_of(t)) {
            FormalTerm f1 = contraction_term(c1);
            for (const auto& c2 : contractions_of(c1.target)) {
                FormalTerm f2 = contraction_term(c2);
                // phi_{B,C} o phi_{A,B} = phi_{A,C}, so only the coefficients matter.
                if (!(f1.target_partition == f2.source_partition) || !a.refines(f2.target_partition))
                    rep.fail("non-composable terms " + t.str());
                acc[ix.index_of(c2.target)] += f1.coefficient * f2.coefficient;
            }
        }
        for (const auto& [j, c] : acc)
            rep.expect(c == 0, t.str() + " -> " + ix.at(j).str() + " coefficient " + std::to_string(c));
    }
    return rep;
}

Report check_equivariance(int n, const std::vector<Permutation>& perms) {
    Report rep("equivariance");
    for (const auto& t : enumerate_trees(n)) {
        auto cs = contractions_of(t);
        if (cs.empty()) continue;
        for (const auto& s : perms) {
            IndexTree st = t.act(s);
            int lt = sign_l(t, s);
            for (const auto& c : cs) {
                Subset sv = s.apply(c.node);
                std::string w = "sigma=" + s.str() + " tree=" + t.str() + " node=" + c.node.str();
                IndexTree image = c.kind == ContractionKind::Ordinary ? ordinary_contraction(st, sv)
                                                                      : exceptional_contraction(st, sv);
                rep.expect(image == c.target.act(s), w + " contraction not carried along");
                int lhs = sign_s_exponent(t, c.node) + sign_l(c.target, s);
                int rhs = lt + sign_s_exponent(st, sv);
                rep.expect((lhs - rhs) % 2 == 0, w + " sign square does not commute");
            }
        }
    }
    return rep;
}

Report check_equivariance(int n) {
    return check_equivariance(n, n <= 4 ? all_permutations(n) : sn_generators(n));
}

namespace {

void for_each_choice(const std::vector<const std::vector<IndexTree>*>& choices, size_t i,
                     std::vector<const IndexTree*>& cur, const auto& fn) {
    if (i == choices.size()) {
        fn(cur);
        return;
    }
    for (const auto& t : *choices[i]) {
        cur[i] = &t;
        for_each_choice(choices, i + 1, cur, fn);
    }
}

}  // namespace

Report sign_identity_check(int n) {
    if (n < 1 || n > 5) throw std::out_of_range("sign_identity_check: n must be in 1..5");
    Report rep("sign_identity");
    uint64_t fixed_fail = 0, moved_fail = 0;
    auto perms = all_permutations(n);
    std::map<int, std::vector<IndexTree>> by_size;
    for (int m = 1; m < n; ++m) by_size[m] = enumerate_trees(m);
    for (const auto& part : enumerate_set_partitions(n)) {
        if (part.size() < 2) continue;
        const auto& bs = part.blocks();
        std::vector<const std::vector<IndexTree>*> choices;
        for (const auto& b : bs) choices.push_back(&by_size[b.size()]);
        std::vector<const IndexTree*> cur(bs.size());
        for_each_choice(choices, 0, cur, [&](const std::vector<const IndexTree*>& ts) {
            std::vector<IndexTree> parts;
            for (auto* p : ts) parts.push_back(*p);
            IndexTree t = glue(part, parts);
            for (const auto& s : perms) {
                long lhs = 0;
                for (size_t j = 0; j < bs.size(); ++j) {
                    lhs += sign_l(*ts[j], induced_on_block(s, bs[j]));
                    for (size_t jj = j + 1; jj < bs.size(); ++jj)
                        if (s.apply(bs[j]) > s.apply(bs[jj])) lhs += ts[j]->k() * ts[jj]->k();
                }
                bool ok = (lhs - sign_l(t, s)) % 2 == 0;
                if (!ok) ++(t.act(s) == t ? fixed_fail : moved_fail);
                rep.expect(ok, "blocks=" + part.str() + " tree=" + t.str() + " sigma=" + s.str());
            }
        });
    }
    rep.info["failures_tree_fixed"] = std::to_string(fixed_fail);
    rep.info["failures_tree_moved"] = std::to_string(moved_fail);
    return rep;
}

}  // namespace pleth
