#include <doctest.h>

#include "pleth/combinat/permutation.hpp"
#include "pleth/equirep/random.hpp"
#include "pleth/mainthm/bridge.hpp"
#include "pleth/mainthm/diagonal.hpp"
#include "pleth/mainthm/verify.hpp"
#include "pleth/stratsys/strictify.hpp"

using namespace pleth;

namespace {

std::vector<XPoint> pts(int k, int nvars) {
    std::vector<Exponent> w;
    for (int i = 0; i < k; ++i) w.push_back(Exponent::unit(i % nvars, i + 1));
    return named_points(w);
}

LaurentPoly mono(int nvars, const Exponent& e, int c = 1) { return LaurentPoly::monomial(nvars, e, Rational(c)); }

MainResult run(const LocalDatum& d, int n_max, std::optional<uint64_t> gauge_seed = std::nullopt) {
    MainOptions opt;
    opt.n_max = n_max;
    opt.gauge_seed = gauge_seed;
    return verify_main(d, opt);
}

// Average of the supertraces over S_m.
RatFun averaged_trace(const WeightedSheaf& v, int m) {
    LaurentPoly s(v.nvars());
    auto all = all_permutations(m);
    for (const auto& g : all) s += v.trace(g);
    return RatFun(s) / RatFun(LaurentPoly(v.nvars(), Rational(static_cast<long>(all.size()))));
}

}  // namespace

TEST_CASE("structure sheaf on one point") {
    auto d = structure_datum(pts(1, 1), 4, 1);
    MainResult r = run(d, 4);
    INFO(r.report.witness);
    CHECK(r.report.pass);
    LaurentPoly t = LaurentPoly::variable(1, 0);
    CHECK(r.e_series[1] == RatFun(t));
    for (int n = 2; n <= 4; ++n) CHECK(r.e_series[n].is_zero());
    for (int n = 0; n <= 4; ++n) CHECK(r.lhs[n] == RatFun(t.pow(static_cast<unsigned>(n))));
}

TEST_CASE("structure sheaf on several points gives complete homogeneous sums") {
    auto xs = pts(2, 2);
    auto d = structure_datum(xs, 3, 2);
    MainResult r = run(d, 3, 11);
    INFO(r.report.witness);
    CHECK(r.report.pass);
    LaurentPoly x = mono(2, xs[0].weight), y = mono(2, xs[1].weight);
    CHECK(r.e_series[1] == RatFun(x + y));
    for (int n = 1; n <= 3; ++n) {
        LaurentPoly h(2);
        for (int i = 0; i <= n; ++i) h += x.pow(static_cast<unsigned>(i)) * y.pow(static_cast<unsigned>(n - i));
        CHECK(r.lhs[n] == RatFun(h));
        if (n >= 2) CHECK(r.e_series[n].is_zero());
    }
}

TEST_CASE("exterior datum gives elementary symmetric sums") {
    auto xs = pts(2, 2);
    auto d = exterior_datum(xs, 2);
    MainResult r = run(d, 4);
    INFO(r.report.witness);
    CHECK(r.report.pass);
    LaurentPoly x = mono(2, xs[0].weight), y = mono(2, xs[1].weight);
    CHECK(r.lhs[1] == RatFun(x + y));
    CHECK(r.lhs[2] == RatFun(x * y));
    CHECK(r.lhs[3].is_zero());
    // Log(1 + x q) = x q - x^2 q^2.
    CHECK(r.e_series[1] == RatFun(x + y));
    CHECK(r.e_series[2] == -RatFun(x * x + y * y));
    CHECK(r.e_series[3].is_zero());
    CHECK(r.e_series[4].is_zero());
}

TEST_CASE("one-point data agree with the tree formula and averaged traces") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        Rng rng(seed);
        LocalDatum d = random_datum(rng, 1, 4, 2);
        MainResult r = run(d, 4, seed);
        INFO(r.report.witness);
        CHECK(r.report.pass);
        for (int n = 1; n <= 4; ++n) {
            const WeightedSheaf* v = d.v(0, n);
            CHECK(r.lhs[n] == (v ? averaged_trace(*v, n) : RatFun()));
            CHECK(r.e_series[n] == gn_class_from_trees(d.reps[0], n, 2).invariant_part());
        }
    }
}

TEST_CASE("random data satisfy the generating-function identity") {
    for (uint64_t seed = 1; seed <= 4; ++seed) {
        Rng rng(seed + 40);
        LocalDatum d = random_datum(rng, rng.range(1, 3), 3, 2);
        MainResult r = run(d, 3, seed);
        INFO(r.report.witness);
        CHECK(r.report.pass);
        CHECK(r.lhs == r.rhs);
        CHECK(plethystic_log(lhs_series(d, 3)) == r.e_series);
    }
    Rng rng(77);
    LocalDatum d = random_datum(rng, 2, 4, 2);
    MainResult r = run(d, 4, 77);
    INFO(r.report.witness);
    CHECK(r.report.pass);
    CHECK(plethystic_exp(r.e_series) == lhs_series(d, 4));
}

TEST_CASE("gauge does not change the result") {
    Rng rng(5);
    LocalDatum d = random_datum(rng, 2, 3, 2);
    MainResult a = run(d, 3), b = run(d, 3, 99);
    CHECK(a.report.pass);
    CHECK(b.report.pass);
    CHECK(a.e_series == b.e_series);
    CHECK(a.lhs == b.lhs);
}

TEST_CASE("complex of G_n: d squared, equivariance and the diagonal") {
    Rng rng(8);
    LocalDatum d = random_datum(rng, 2, 3, 2);
    auto sp = build_space(3, d.xs);
    System s = system_from_local_datum(d, sp);
    System strict = assemble_strict(sp, 2, strictify(s).entries);
    GnComplex cx = build_gn(strict);
    Report eq = check_gn_equivariance(cx);
    INFO(eq.witness);
    CHECK(eq.pass);
    DiagonalSheaf h = extract_hn(cx);
    CHECK(h.fibers.size() == d.xs.size());
    for (const auto& f : h.fibers) {
        CHECK(sp->on_diagonal(f.point));
        // Euler characteristic of the invariants computed on chains and on cohomology.
        CHECK(invariant_character(f, 3) == invariant_euler_chain(cx, f.point));
    }
    for (int x = 0; x < sp->points(); ++x)
        if (!sp->on_diagonal(x))
            for (int dim : point_cohomology(cx, x).dims) CHECK(dim == 0);
}

TEST_CASE("psi filtration at n = 3") {
    auto d = structure_datum(pts(2, 1), 3, 1);
    auto sp = build_space(3, d.xs);
    System s = system_from_local_datum(d, sp);
    GnComplex cx = build_gn(assemble_strict(sp, 1, strictify(s).entries));
    SetPartition b = SetPartition::from_blocks(3, {{1}, {2, 3}});
    for (bool swapped : {false, true}) {
        Report r = filtration_check(cx, b, swapped);
        INFO(r.witness);
        CHECK(r.pass);
    }
    CHECK(filtration_check(cx, b).info.at("levels") == "4");
}

TEST_CASE("cohomology on a point matches the inductive class") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        auto p = random_presentation(rng, 4, 2);
        for (int m = 1; m <= 4; ++m) {
            Report b = verify_bridge(p.F, m, 2);
            INFO(b.witness);
            CHECK(b.pass);
            CHECK(gn_class_from_trees(p.F, m, 2) == gn_class_inductive(p.F, m, 2));
        }
    }
}
