#include "pleth/mainthm/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "pleth/mainthm/diagonal.hpp"
#include "pleth/stratsys/strictify.hpp"
#include "pleth/treecx/psi.hpp"

namespace pleth {

LaurentPoly sym_power_character(const System& s) {
    const StratSpace& sp = s.sp();
    const auto& G = *sp.group();
    int top = sp.partitions().one_block();
    LaurentPoly acc(s.nvars());
    for (int x = 0; x < sp.points(); ++x) {
        const auto& c = sp.coords(x);
        if (!std::is_sorted(c.begin(), c.end())) continue;
        LaurentPoly tr(s.nvars());
        int stab = 0;
        for (int g = 0; g < G.order(); ++g) {
            if (sp.act(g, x) != x) continue;
            ++stab;
            tr += supertrace(s.fiber(top, x), s.rho(g, top, x));
        }
        tr *= Rational(1) / Rational(stab);
        acc += tr;
    }
    return acc;
}

QSeries lhs_series(const LocalDatum& d, int n_max) {
    QSeries out(n_max);
    out[0] = RatFun(1);
    for (int n = 1; n <= n_max; ++n)
        out[n] = RatFun(sym_power_character(system_from_local_datum(d, build_space(n, d.xs))));
    return out;
}

MainResult verify_main(const LocalDatum& d, const MainOptions& opt) {
    MainResult res;
    res.report = Report("main");
    int N = opt.n_max;
    res.lhs = QSeries(N);
    res.lhs[0] = RatFun(1);
    res.e_series = QSeries(N);
    std::optional<Rng> rng;
    if (opt.gauge_seed) rng.emplace(*opt.gauge_seed);
    for (int n = 1; n <= N; ++n) {
        std::string at = "n=" + std::to_string(n) + " ";
        auto space = build_space(n, d.xs);
        System sys = system_from_local_datum(d, space);
        if (rng) sys = gauge(sys, *rng);
        Report cs = check_system(sys);
        res.report.expect(cs.pass, at + "system: " + cs.witness);
        res.lhs[n] = RatFun(sym_power_character(sys));

        StrictifyResult st = strictify(sys);
        res.report.expect(st.report.pass, at + "strictify: " + st.report.witness);
        System strict = assemble_strict(space, d.nvars, st.entries);
        Report ss = check_system(strict);
        res.report.expect(ss.pass, at + "assembled strict system: " + ss.witness);
        std::string kt = compare_traces(*space, k_traces(sys), k_traces(strict));
        res.report.expect(kt.empty(), at + "K-class changed: " + kt);

        GnComplex cx;
        try {
            cx = build_gn(strict);
        } catch (const std::runtime_error& e) {
            res.report.fail(at + e.what());
            continue;
        }
        res.report.cases += static_cast<uint64_t>(space->points());
        Report eq = check_gn_equivariance(cx);
        res.report.expect(eq.pass, at + "G_n equivariance: " + eq.witness);

        uint64_t off_zero = 0, euler_ok = 0;
        for (int x = 0; x < space->points(); ++x) {
            PointCohomology h = point_cohomology(cx, x);
            LaurentPoly total(d.nvars);
            for (const auto& c : h.chars) total += c;
            if (res.report.expect((total - h.euler_chain).is_zero(), at + "Euler bookkeeping at " + space->point_str(x)))
                ++euler_ok;
            if (space->on_diagonal(x)) continue;
            bool zero = std::all_of(h.dims.begin(), h.dims.end(), [](int v) { return v == 0; });
            if (res.report.expect(zero, at + "cohomology off the diagonal at " + space->point_str(x))) ++off_zero;
        }
        res.report.info[at + "acyclic_points"] = std::to_string(off_zero);

        if (opt.filtration && n >= 2) {
            uint64_t checks = 0;
            for (const auto& b : two_block_partitions(n))
                for (bool sw : {false, true}) {
                    Report fr = filtration_check(cx, b, sw);
                    res.report.expect(fr.pass, at + fr.witness);
                    checks += fr.cases;
                }
            res.report.info[at + "filtration_cases"] = std::to_string(checks);
        }

        try {
            DiagonalSheaf hn = extract_hn(cx);
            LaurentPoly en = en_character(hn);
            LaurentPoly hopf(d.nvars);
            for (int x : space->diagonal()) hopf += invariant_euler_chain(cx, x);
            res.report.expect((en - hopf).is_zero(), at + "invariant cohomology differs from the chain-level trace");
            res.e_series[n] = RatFun(en);
        } catch (const std::runtime_error& e) {
            res.report.fail(at + e.what());
        }
    }
    res.rhs = plethystic_exp(res.e_series);
    int mis = QSeries::first_mismatch(res.lhs, res.rhs);
    res.report.expect(mis < 0, "LHS and RHS differ at q^" + std::to_string(mis));
    res.report.info["lhs"] = res.lhs.str();
    res.report.info["rhs"] = res.rhs.str();
    res.report.info["e_series"] = res.e_series.str();
    return res;
}

}  // namespace pleth
