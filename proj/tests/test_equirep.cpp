#include <doctest.h>

#include <functional>
#include <memory>

#include "pleth/coeffring/qseries.hpp"
#include "pleth/combinat/partition.hpp"
#include "pleth/equirep/classfn.hpp"
#include "pleth/equirep/locexp.hpp"
#include "pleth/equirep/random.hpp"
#include "pleth/equirep/sheaf.hpp"

using namespace pleth;

namespace {

using GroupPtr = WeightedSheaf::GroupPtr;

GroupPtr group_of(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

WeightedSheaf line_rep(int m, const Exponent& w, int parity, int nvars) {
    return WeightedSheaf::trivial_on_point(symmetric_group(m), WeightedSpace::line(nvars, w, parity));
}

// Induced character by the Frobenius formula.
LaurentPoly frobenius(const WeightedSheaf& f, const Permutation& g) {
    const auto& H = *f.group();
    LaurentPoly s(f.nvars());
    for (const auto& x : all_permutations(g.n())) {
        Permutation c = x.inverse() * g * x;
        if (H.contains(c)) s += f.trace(c);
    }
    return s * Rational(1, H.order());
}

// Coefficient of q^n in prod_m 1/(1 - t^{w_m} q^m) (even m) and
// prod_m (1 - t^{w_m} q^m) (odd m): multisets of parts where odd parts occur at
// most once, each part contributing -t^{w} when odd and t^{w} when even.
LaurentPoly multiset_oracle(const std::vector<std::pair<Exponent, int>>& lines, int n, int nvars) {
    LaurentPoly total(nvars);
    std::function<void(int, int, LaurentPoly)> go = [&](int part, int left, LaurentPoly acc) {
        if (left == 0) {
            total += acc;
            return;
        }
        if (part > static_cast<int>(lines.size())) return;
        const auto& [w, par] = lines[static_cast<size_t>(part - 1)];
        LaurentPoly mono = LaurentPoly::monomial(nvars, w, par ? -1 : 1);
        int max_use = par ? 1 : left / part;
        LaurentPoly cur = acc;
        for (int use = 0; use <= max_use && use * part <= left; ++use) {
            go(part + 1, left - use * part, cur);
            cur = cur * mono;
        }
    };
    go(1, n, LaurentPoly(nvars, 1));
    return total;
}

}  // namespace

TEST_CASE("weighted spaces and koszul reordering") {
    WeightedSpace odd = WeightedSpace::line(1, Exponent::unit(0), 1);
    CHECK(odd.character() == -LaurentPoly::variable(1, 0));
    WeightedSpace two = direct_sum(odd, WeightedSpace::line(1, {}, 0));
    CHECK(tensor(two, two).dim() == 4);
    CHECK(tensor(two, two).character() == two.character() * two.character());
    Matrix swap = koszul_reorder({odd, odd}, {1, 0});
    CHECK(swap == Matrix::identity(1).scaled(-1));
    WeightedSpace even = WeightedSpace::line(1, {}, 0);
    CHECK(koszul_reorder({even, odd}, {1, 0}) == Matrix::identity(1));
}

TEST_CASE("sheaf construction validates the cocycle law") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Rng rng(seed);
        for (int m = 1; m <= 4; ++m) CHECK(random_rep(rng, m, 2).check().empty());
    }
    auto s2 = symmetric_group(2);
    std::vector<Matrix> bad{Matrix::identity(1), Matrix::identity(1).scaled(2)};
    CHECK_THROWS(WeightedSheaf::on_point(s2, WeightedSpace::line(1), bad));
}

TEST_CASE("tensor with the unit and multiplicativity of characters") {
    Rng rng(4);
    for (int it = 0; it < 8; ++it) {
        int m = rng.range(1, 4);
        WeightedSheaf f = random_rep(rng, m, 2), g = random_rep(rng, m, 2);
        WeightedSheaf unit = line_rep(m, {}, 0, 2);
        CHECK(kclass(tensor(f, unit)) == kclass(f));
        CHECK(kclass(tensor(f, g)) == kclass(f) * kclass(g));
        CHECK(kclass(direct_sum(f, g)) == kclass(f) + kclass(g));
        CHECK(tensor(f, g).check().empty());
    }
}

TEST_CASE("traces are class functions") {
    Rng rng(8);
    for (int n = 1; n <= 5; ++n) {
        WeightedSheaf f = random_rep(rng, n, 2);
        for (const auto& s : all_permutations(n))
            CHECK(f.trace(s) == f.trace(permutation_of_type(s.cycle_type())));
    }
}

TEST_CASE("induction") {
    auto triv = group_of(PermGroup::trivial(2));
    WeightedSheaf one = WeightedSheaf::trivial_on_point(triv, WeightedSpace::line(1));
    WeightedSheaf reg = induce(one, symmetric_group(2));
    CHECK(reg.check().empty());
    CHECK(reg.trace(Permutation::identity(2)) == LaurentPoly(1, 2));
    CHECK(reg.trace(Permutation::transposition(2, 1, 2)).is_zero());

    Rng rng(12);
    WeightedSheaf f = random_rep(rng, 3, 2);
    CHECK(kclass(induce(f, symmetric_group(3))) == kclass(f));

    for (int n = 2; n <= 4; ++n)
        for (const auto& a : enumerate_set_partitions(n)) {
            auto h = group_of(PermGroup::stabilizer(a));
            WeightedSheaf r = restrict(random_rep(rng, n, 2), h);
            WeightedSheaf ind = induce(r, symmetric_group(n));
            CHECK(ind.check().empty());
            CHECK(ind.total_dim() == r.total_dim() * static_cast<int>(symmetric_group(n)->order() / h->order()));
            for (const auto& lam : enumerate_int_partitions(n)) {
                Permutation g = permutation_of_type(lam);
                CHECK(ind.trace(g) == frobenius(r, g));
            }
        }
}

TEST_CASE("invariants") {
    CHECK(invariants(line_rep(2, {}, 0, 1)).dim() == 1);
    CHECK(invariants(line_rep(2, {}, 0, 1).sign_twisted()).dim() == 0);
    auto triv = group_of(PermGroup::trivial(3));
    WeightedSheaf reg = induce(WeightedSheaf::trivial_on_point(triv, WeightedSpace::line(1)), symmetric_group(3));
    CHECK(invariants(reg).dim() == 1);
    Rng rng(2);
    for (int n = 1; n <= 4; ++n) {
        WeightedSheaf f = random_rep(rng, n, 2);
        CHECK(RatFun(invariants(f).character()) == kclass(f).invariant_part());
    }
}

TEST_CASE("F_lambda for lambda = (n) and (1,1)") {
    Rng rng(6);
    RepSequence reps;
    for (int m = 1; m <= 3; ++m) reps.push_back(random_rep(rng, m, 2));
    CHECK(kclass(f_lambda(reps, IntPartition({3}), 2)) == kclass(reps[2]));

    // Even line: F_{(1,1)} is a trivial line. Odd line: the swap picks up the
    // Koszul sign and the line becomes the sign character.
    Permutation sw = Permutation::transposition(2, 1, 2);
    RepSequence even{line_rep(1, {}, 0, 1)}, odd{line_rep(1, {}, 1, 1)};
    WeightedSheaf fe = f_lambda(even, IntPartition({1, 1}), 1);
    WeightedSheaf fo = f_lambda(odd, IntPartition({1, 1}), 1);
    CHECK(fe.check().empty());
    CHECK(fo.check().empty());
    CHECK(fe.trace(Permutation::identity(2)) == LaurentPoly(1, 1));
    CHECK(fe.trace(sw) == LaurentPoly(1, 1));
    CHECK(fo.trace(Permutation::identity(2)) == LaurentPoly(1, 1));
    CHECK(fo.trace(sw) == LaurentPoly(1, -1));
    CHECK(kclass(fo) == kclass(fe.sign_twisted()));
}

TEST_CASE("the tensor power of D has nowhere-vanishing traces") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Rng rng(seed);
        WeightedSpace d = random_denominator(rng, 2);
        LaurentPoly chi = d.character();
        REQUIRE_FALSE(chi.is_zero());
        for (int n = 1; n <= 4; ++n) {
            RepSequence dreps;
            for (int m = 1; m <= n; ++m) dreps.push_back(WeightedSheaf::trivial_on_point(symmetric_group(m), d));
            SetPartition single = SetPartition::singletons(n);
            WeightedSpace fib = block_tensor_fiber(dreps, single, 2);
            for (const auto& lam : enumerate_int_partitions(n)) {
                Permutation s = permutation_of_type(lam);
                LaurentPoly expect(2, 1);
                for (int c : lam.parts()) expect = expect * chi.adams(c);
                LaurentPoly tr = supertrace(fib, block_tensor_map(dreps, single, s));
                CHECK(tr == expect);
                CHECK_FALSE(tr.is_zero());
            }
        }
    }
}

TEST_CASE("alpha_lambda") {
    Rng rng(21);
    QuotientPresentation p = random_presentation(rng, 4, 2);
    QuotientPresentation unit = p;
    unit.D = WeightedSpace::line(2);
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : enumerate_int_partitions(n))
            CHECK(alpha_lambda(unit, lam) == kclass(f_lambda(unit.F, lam, 2)));

    // Single block: value is tr F / tr D.
    for (int n = 1; n <= 4; ++n) CHECK(alpha_lambda(p, IntPartition({n})) == p.alpha(n));

    // Multiplying F_n and D by the same trivial E keeps every alpha_lambda.
    WeightedSpace e = direct_sum(WeightedSpace::line(2, Exponent::unit(1)), WeightedSpace::line(2, Exponent::unit(0), 1));
    QuotientPresentation q = p;
    q.D = tensor(p.D, e);
    for (int m = 1; m <= 4; ++m)
        if (p.F[static_cast<size_t>(m - 1)].group())
            q.F[static_cast<size_t>(m - 1)] =
                tensor(p.F[static_cast<size_t>(m - 1)], WeightedSheaf::trivial_on_point(symmetric_group(m), e));
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : enumerate_int_partitions(n)) CHECK(alpha_lambda(q, lam) == alpha_lambda(p, lam));

    QuotientPresentation bad = p;
    bad.D = direct_sum(WeightedSpace::line(2), WeightedSpace::line(2, {}, 1));
    CHECK_THROWS_AS(alpha_lambda(bad, IntPartition({2, 1})), UnitError);
}

TEST_CASE("loc_exp examples") {
    QuotientPresentation zero{1, {}, WeightedSpace::line(1)};
    CHECK(loc_exp(zero, 4).invariant_series(RatFun(1)) == QSeries::constant(4, RatFun(1)));

    QuotientPresentation geo{1, {line_rep(1, Exponent::unit(0), 0, 1)}, WeightedSpace::line(1)};
    QSeries inv = loc_exp(geo, 5).invariant_series(RatFun(1));
    for (int n = 0; n <= 5; ++n) CHECK(inv[n] == RatFun(LaurentPoly::variable(1, 0).pow(static_cast<unsigned>(n))));

    // Only alpha_3 nonzero: beta_k vanishes unless 3 | k.
    QuotientPresentation only3{1, {WeightedSheaf(), WeightedSheaf(), line_rep(3, Exponent::unit(0), 0, 1)},
                               WeightedSpace::line(1)};
    KClassSeries b = loc_exp(only3, 6);
    for (int k = 1; k <= 6; ++k)
        if (k % 3 != 0)
            for (size_t i = 0; i < b[k].classes().size(); ++i) CHECK(b[k].at(i).is_zero());
}

TEST_CASE("invariant part of loc_exp against a multiset enumeration") {
    // Lines with trivial action: the invariant series counts multisets of
    // parts, with odd lines used at most once and contributing a sign.
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        Rng rng(seed);
        const int N = 5;
        std::vector<std::pair<Exponent, int>> lines;
        RepSequence reps;
        Exponent u = random_weight(rng, 2, 1);
        for (int m = 1; m <= N; ++m) {
            Exponent w = random_weight(rng, 2, 2);
            int par = rng.chance(1, 3) ? 1 : 0;
            reps.push_back(line_rep(m, w, par, 2));
            lines.emplace_back(w - u, par);
        }
        QuotientPresentation p{2, reps, WeightedSpace::line(2, u)};
        QSeries inv = loc_exp(p, N).invariant_series(RatFun(1));
        for (int n = 0; n <= N; ++n) CHECK(inv[n] == RatFun(multiset_oracle(lines, n, 2)));
        CHECK(verify_character_lemma(p, N).report.pass);
    }
}

TEST_CASE("character lemma on random presentations") {
    for (uint64_t seed = 1; seed <= 3; ++seed) {
        Rng rng(seed);
        auto p = random_presentation(rng, 3, 2);
        auto r = verify_character_lemma(p, 4);
        INFO(r.report.witness);
        CHECK(r.report.pass);
        CHECK(r.lhs == r.rhs);
    }
}
