#include <doctest.h>

#include <json.hpp>

#include "pleth/stratsys/datum.hpp"
#include "pleth/stratsys/serialize.hpp"
#include "pleth/stratsys/strictify.hpp"

using namespace pleth;

namespace {

std::vector<XPoint> pts(int k) {
    std::vector<Exponent> w;
    for (int i = 0; i < k; ++i) w.push_back(Exponent::unit(i % 2, i + 1));
    return named_points(w);
}

// Character of F_A at x straight from the datum: product over the blocks K of
// meet(A, type x) of the character of V_{x_K, |K|}.
LaurentPoly fiber_character_oracle(const LocalDatum& d, const StratSpace& sp, int a, int x) {
    const auto& ix = sp.partitions();
    SetPartition m = meet(ix.at(a), ix.at(sp.type(x)));
    LaurentPoly c(d.nvars, 1);
    for (const auto& k : m.blocks()) {
        int p = sp.coords(x)[static_cast<size_t>(k.min_element() - 1)];
        const WeightedSheaf* v = d.v(p, k.size());
        if (!v) return LaurentPoly(d.nvars);
        c = c * v->fiber(0).character();
    }
    return c;
}

SystemMorphism identity_morphism(const System& s) {
    SystemMorphism f;
    for (int i = 0; i < s.num_objects(); ++i) {
        f.m.emplace_back();
        for (int x = 0; x < s.sp().points(); ++x) f.m.back().push_back(Matrix::identity(s.fiber(i, x).dim()));
    }
    return f;
}

SystemMorphism zero_morphism(const System& s) {
    SystemMorphism f;
    for (int i = 0; i < s.num_objects(); ++i) {
        f.m.emplace_back();
        for (int x = 0; x < s.sp().points(); ++x) {
            int d = s.fiber(i, x).dim();
            f.m.back().push_back(Matrix(d, d));
        }
    }
    return f;
}

struct Instance {
    LocalDatum datum;
    SpacePtr space;
    System sys;
};

Instance random_instance(uint64_t seed, int n, int np, bool gauged = true) {
    Rng rng(seed);
    LocalDatum d = random_datum(rng, np, n, 2);
    SpacePtr sp = build_space(n, d.xs);
    System s = system_from_local_datum(d, sp);
    if (gauged) s = gauge(s, rng);
    return {d, sp, s};
}

}  // namespace

TEST_CASE("strata of X^n") {
    auto s12 = build_space(2, pts(1));
    const auto& ix = s12->partitions();
    CHECK(s12->stratum(ix.singletons()).empty());
    CHECK(s12->stratum(ix.one_block()).size() == 1);
    auto s22 = build_space(2, pts(2));
    CHECK(s22->stratum(ix.singletons()).size() == 2);
    CHECK(s22->stratum(ix.one_block()).size() == 2);
    auto s33 = build_space(3, pts(3));
    const auto& ix3 = s33->partitions();
    CHECK(s33->points() == 27);
    CHECK(s33->stratum(ix3.singletons()).size() == 6);
    CHECK(s33->stratum(ix3.one_block()).size() == 3);
    size_t pairs = 0;
    for (int a = 0; a < ix3.count(); ++a)
        if (ix3.at(a).size() == 2) pairs += s33->stratum(a).size();
    CHECK(pairs == 18);
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) CHECK(build_space(n, pts(k))->check().empty());
    CHECK_THROWS(build_space(2, {XPoint{"a", {}}, XPoint{"a", {}}}));
}

TEST_CASE("the group acts on points by permuting positions") {
    auto sp = build_space(3, pts(3));
    const auto& G = *sp->group();
    for (int g = 0; g < G.order(); ++g)
        for (int x = 0; x < sp->points(); ++x) {
            const auto& c = sp->coords(x);
            const auto& img = sp->coords(sp->act(g, x));
            Permutation inv = G.at(g).inverse();
            for (int i = 1; i <= 3; ++i) CHECK(img[static_cast<size_t>(i - 1)] == c[static_cast<size_t>(inv(i) - 1)]);
            CHECK(sp->type(sp->act(g, x)) == sp->act_partition(g, sp->type(x)));
        }
}

TEST_CASE("structure sheaf system") {
    auto d = structure_datum(pts(2), 3, 2);
    auto sp = build_space(3, d.xs);
    System s = system_from_local_datum(d, sp);
    Report r = check_system(s);
    INFO(r.witness);
    CHECK(r.pass);
    for (int i = 0; i < s.num_objects(); ++i)
        for (int x = 0; x < sp->points(); ++x) CHECK(s.fiber(i, x).dim() == 1);
    for (const auto& [i, j] : s.pairs())
        for (int x = 0; x < sp->points(); ++x)
            if (const Matrix* m = s.phi(i, j, x)) CHECK(*m == Matrix::identity(1));
}

TEST_CASE("exterior datum vanishes where a block meets a repeated point") {
    auto d = exterior_datum(pts(2), 2);
    auto sp = build_space(3, d.xs);
    System s = system_from_local_datum(d, sp);
    const auto& ix = sp->partitions();
    for (int a = 0; a < ix.count(); ++a)
        for (int x = 0; x < sp->points(); ++x) {
            bool sing = meet(ix.at(a), ix.at(sp->type(x))) == SetPartition::singletons(3);
            CHECK((s.fiber(a, x).dim() > 0) == sing);
        }
    CHECK(check_system(s).pass);
}

TEST_CASE("fibers of datum systems match the product formula") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        Instance in = random_instance(seed, 3, 2, false);
        for (int a = 0; a < in.sys.num_objects(); ++a)
            for (int x = 0; x < in.space->points(); ++x)
                CHECK(in.sys.fiber(a, x).character() == fiber_character_oracle(in.datum, *in.space, a, x));
    }
}

TEST_CASE("system axioms hold for random gauged systems and catch corruption") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Rng rng(seed);
        int n = rng.range(1, 3), np = rng.range(1, 3);
        Instance in = random_instance(seed * 7, n, np);
        Report r = check_system(in.sys);
        INFO(r.witness);
        CHECK(r.pass);
    }
    Instance in = random_instance(3, 2, 2);
    System bad = in.sys;
    bool changed = false;
    for (const auto& [i, j] : bad.pairs()) {
        if (i == j || changed) continue;
        for (int x = 0; x < bad.sp().points() && !changed; ++x)
            if (const Matrix* m = bad.phi(i, j, x); m && !m->is_zero()) {
                bad.set_phi(i, j, x, m->scaled(2));
                changed = true;
            }
    }
    REQUIRE(changed);
    CHECK_FALSE(check_system(bad).pass);
}

TEST_CASE("functor D on the structure sheaf") {
    auto d = structure_datum(pts(2), 2, 2);
    auto sp = build_space(2, d.xs);
    System s = system_from_local_datum(d, sp);
    int alpha = sp->partitions().singletons();
    System dd = functor_d(s, alpha);
    CHECK(check_system(dd, false).pass);
    CHECK(dd.strict());
    for (int i = 0; i < dd.num_objects(); ++i)
        for (int x = 0; x < sp->points(); ++x) CHECK(dd.fiber(i, x).dim() == (sp->on_diagonal(x) ? 0 : 1));
}

TEST_CASE("functor D kills maps between unrelated indices") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        Instance in = random_instance(seed, 3, 2);
        const auto& ix = in.space->partitions();
        for (int alpha = 0; alpha < ix.count(); ++alpha) {
            System dd = functor_d(in.sys, alpha);
            CHECK(check_system(dd, false).pass);
            for (const auto& [i, j] : dd.pairs())
                if (!ix.sim(i, j, alpha))
                    for (int x = 0; x < in.space->points(); ++x)
                        if (const Matrix* m = dd.phi(i, j, x)) CHECK(m->is_zero());
            System dt = functor_d_tilde(in.sys, alpha);
            CHECK(check_system(dt).pass);
            SystemMorphism f = morphism_i_tilde(in.sys, dt, alpha);
            CHECK(check_morphism(in.sys, dt, f).pass);
            CHECK(cokernel(in.sys, dt, f).is_zero());
        }
    }
}

TEST_CASE("support measure") {
    auto sp = build_space(2, pts(2));
    System zero(sp, 2, false);
    for (int a = 0; a < sp->num_partitions(); ++a) CHECK(support_measure(zero, a) == 0);
    auto d = structure_datum(pts(2), 2, 2);
    System s = system_from_local_datum(d, sp);
    int single = sp->partitions().singletons();
    System conc = functor_d_tilde(s, single);
    CHECK(support_measure(conc, single) == 1);
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Instance in = random_instance(seed, 3, 2);
        // The first refinement-minimal index with nonzero measure has measure 1.
        const auto& ix = in.space->partitions();
        for (int a = 0; a < ix.count(); ++a) {
            int m = support_measure(in.sys, a);
            if (m == 0) continue;
            bool minimal = true;
            for (int b = 0; b < ix.count(); ++b)
                if (b != a && ix.refines(b, a) && support_measure(in.sys, b) != 0) minimal = false;
            if (minimal) CHECK(m == 1);
        }
    }
}

TEST_CASE("kernel and cokernel of simple morphisms") {
    Instance in = random_instance(5, 2, 2);
    SystemMorphism id = identity_morphism(in.sys);
    CHECK(check_morphism(in.sys, in.sys, id).pass);
    CHECK(kernel(in.sys, in.sys, id).is_zero());
    CHECK(cokernel(in.sys, in.sys, id).is_zero());
    SystemMorphism z = zero_morphism(in.sys);
    CHECK(compare_traces(*in.space, k_traces(kernel(in.sys, in.sys, z)), k_traces(in.sys)).empty());
    CHECK(compare_traces(*in.space, k_traces(cokernel(in.sys, in.sys, z)), k_traces(in.sys)).empty());
}

TEST_CASE("assembling signed entries") {
    auto d = structure_datum(pts(2), 2, 2);
    auto sp = build_space(2, d.xs);
    System s = system_from_local_datum(d, sp);
    StrictifyResult st = strictify(s);
    REQUIRE(st.report.pass);
    System strict = assemble_strict(sp, 2, st.entries);
    CHECK(assemble_strict(sp, 2, {}).is_zero());
    CHECK(compare_traces(*sp, k_traces(assemble_strict(sp, 2, {st.entries.front()})), k_traces(st.entries.front().system)).empty());
    std::vector<SignedEntry> cancel{st.entries.front(), st.entries.front()};
    cancel[1].multiplicity = -cancel[0].multiplicity;
    for (const auto& [key, v] : k_traces(assemble_strict(sp, 2, cancel))) CHECK(v.is_zero());
    CHECK(compare_traces(*sp, k_traces(s), k_traces(strict)).empty());
    CHECK(compare_traces(*sp, k_traces(direct_sum(s, parity_shifted(s))), k_traces(System(sp, 2, false))).empty());
}

TEST_CASE("strictification preserves K-classes") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Rng rng(seed + 100);
        int n = rng.range(1, 3), np = rng.range(1, 3);
        Instance in = random_instance(seed, n, np);
        StrictifyResult st = strictify(in.sys);
        INFO(st.report.witness);
        CHECK(st.report.pass);
        for (const auto& e : st.entries) {
            CHECK(e.system.strict());
            CHECK(check_system(e.system).pass);
        }
        System strict = assemble_strict(in.space, 2, st.entries);
        CHECK(check_system(strict).pass);
        KTraces kt = k_traces(st.entries);
        CHECK(compare_traces(*in.space, k_traces(in.sys), kt).empty());
        // Identity traces against the product formula, independent of rho.
        for (int a = 0; a < in.sys.num_objects(); ++a)
            for (int x = 0; x < in.space->points(); ++x)
                CHECK(kt.at({a, x, 0}) == fiber_character_oracle(in.datum, *in.space, a, x));
    }
    // A strict input comes back K-equivalent.
    Instance in = random_instance(4, 2, 2);
    System strict = assemble_strict(in.space, 2, strictify(in.sys).entries);
    StrictifyResult again = strictify(strict);
    CHECK(again.report.pass);
    CHECK(compare_traces(*in.space, k_traces(strict), k_traces(again.entries)).empty());
}

TEST_CASE("json round trip") {
    Instance in = random_instance(9, 2, 2);
    nlohmann::json j = system_to_json(in.sys);
    CHECK(j.at("schema") == 1);
    System back = system_from_json(j);
    CHECK(system_to_json(back) == j);
    CHECK(compare_traces(*in.space, k_traces(back), k_traces(in.sys)).empty());
    CHECK(check_system(back).pass);
    nlohmann::json broken = j;
    broken["schema"] = 99;
    CHECK_THROWS(system_from_json(broken));
}
