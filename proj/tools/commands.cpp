#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pleth/coeffring/parse.hpp"
#include "pleth/coeffring/qseries.hpp"
#include "pleth/coeffring/random.hpp"
#include "pleth/combinat/axioms.hpp"
#include "pleth/equirep/locexp.hpp"
#include "pleth/equirep/random.hpp"
#include "pleth/mainthm/bridge.hpp"
#include "pleth/mainthm/verify.hpp"
#include "pleth/stratsys/datum.hpp"
#include "pleth/stratsys/strictify.hpp"
#include "pleth/treecx/differential.hpp"
#include "pleth/treecx/psi.hpp"
#include "pleth/treecx/shlog.hpp"
#include "pleth/treecx/tree.hpp"

namespace pleth::cli {

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw BadInput("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int need_n(const RunConfig& cfg, int def, int lo, int hi) {
    int n = cfg.n.value_or(def);
    if (n < lo || n > hi)
        throw BadInput("--n must be in " + std::to_string(lo) + ".." + std::to_string(hi) + " for " +
                       (cfg.suite.empty() ? cfg.command : cfg.suite));
    return n;
}

void need_range(const char* flag, int v, int lo, int hi) {
    if (v < lo || v > hi)
        throw BadInput(std::string(flag) + " must be in " + std::to_string(lo) + ".." + std::to_string(hi));
}

json report_json(const Report& r) {
    json j;
    j["check"] = r.check;
    j["status"] = r.pass ? "PASS" : "FAIL";
    j["cases"] = r.cases;
    j["failures"] = r.failures;
    j["witness"] = r.witness;
    if (!r.info.empty()) j["info"] = r.info;
    return j;
}

// Runs fn(seed) for seeds seed0, seed0 + 1, ... over a pool of workers. The
// result order follows the seeds, whatever the worker count.
std::vector<Report> run_seeds(const RunConfig& cfg, int count, const std::function<Report(uint64_t)>& fn) {
    std::vector<Report> out(static_cast<size_t>(count));
    int workers = std::clamp(cfg.workers, 1, std::max(1, count));
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                out[static_cast<size_t>(i)] = fn(cfg.seed + static_cast<uint64_t>(i));
            } catch (const std::exception& e) {
                Report r("seed");
                r.fail(std::string("exception: ") + e.what());
                out[static_cast<size_t>(i)] = r;
            }
        }
    };
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

struct SuiteOutput {
    Report report;
    json parameters = json::object();
    json runs = json::array();
    std::optional<int> n;
};

SuiteOutput seeded(const RunConfig& cfg, const std::string& name, int def_count,
                   const std::function<Report(uint64_t)>& fn) {
    SuiteOutput o;
    o.report = Report(name);
    int count = cfg.count.value_or(def_count);
    need_range("--count", count, 1, 10000);
    o.parameters["seed"] = cfg.seed;
    o.parameters["count"] = count;
    auto rs = run_seeds(cfg, count, fn);
    for (size_t i = 0; i < rs.size(); ++i) {
        json r = report_json(rs[i]);
        r["seed"] = cfg.seed + i;
        o.runs.push_back(r);
        if (!rs[i].pass) rs[i].check = "seed " + std::to_string(cfg.seed + i);
        o.report.absorb(rs[i]);
    }
    return o;
}

SuiteOutput suite_d2(const RunConfig& cfg) {
    SuiteOutput o;
    int n = need_n(cfg, 6, 1, 7);
    o.n = n;
    o.report = Report("d2");
    for (int m = 1; m <= n; ++m) {
        Report r = check_d_squared(m);
        r.check = "n=" + std::to_string(m);
        o.report.absorb(r);
    }
    return o;
}

SuiteOutput suite_equivariance(const RunConfig& cfg) {
    SuiteOutput o;
    int n = need_n(cfg, 5, 1, 6);
    o.n = n;
    o.report = Report("equivariance");
    for (int m = 1; m <= n; ++m) {
        Report r = check_equivariance(m);
        r.check = "contractions n=" + std::to_string(m);
        o.report.absorb(r);
    }
    int glue_max = std::min(n, 4);
    for (int m = 1; m <= glue_max; ++m) {
        Report r = sign_identity_check(m);
        r.check = "gluing n=" + std::to_string(m);
        o.report.absorb(r);
    }
    o.report.info["gluing_max_n"] = std::to_string(glue_max);
    return o;
}

SuiteOutput suite_gluing(const RunConfig& cfg) {
    SuiteOutput o;
    int n = need_n(cfg, 4, 1, 5);
    o.n = n;
    o.report = sign_identity_check(n);
    return o;
}

SuiteOutput suite_logformula(const RunConfig& cfg) {
    SuiteOutput o;
    int n = need_n(cfg, 6, 1, 7);
    o.n = n;
    o.report = Report("logformula");
    for (int m = 1; m <= n; ++m) {
        ShlogMultiset a = shlog_tree_formula(m), b = shlog_inductive(m);
        uint64_t total = 0;
        for (const auto& [k, c] : a) total += c;
        o.report.expect(a == b, "n=" + std::to_string(m) + " trees: " + str(a) + " inductive: " + str(b));
        o.report.info["summands_n" + std::to_string(m)] = std::to_string(total);
    }
    return o;
}

SuiteOutput suite_psi(const RunConfig& cfg) {
    SuiteOutput o;
    int n = need_n(cfg, 6, 1, 6);
    o.n = n;
    o.report = Report("psi");
    for (int m = 1; m <= n; ++m) {
        Report mono = check_psi_monotone(m);
        mono.check = "monotone n=" + std::to_string(m);
        o.report.absorb(mono);
        for (const auto& b : two_block_partitions(m))
            for (bool sw : {false, true}) {
                Report r = psi_matching(m, b, sw);
                r.check = "matching n=" + std::to_string(m) + " B=" + b.str() + (sw ? " swapped" : "");
                o.report.absorb(r);
            }
    }
    return o;
}

SuiteOutput suite_axioms(const RunConfig& cfg) {
    SuiteOutput o;
    int n = need_n(cfg, 5, 1, 6);
    o.n = n;
    o.report = Report("axioms");
    for (int m = 1; m <= n; ++m) {
        Report r = check_axioms(m);
        r.check = "n=" + std::to_string(m);
        o.report.absorb(r);
    }
    return o;
}

uint64_t double_factorial_odd(int n) {
    uint64_t r = 1;
    for (int k = 2 * n - 3; k > 1; k -= 2) r *= static_cast<uint64_t>(k);
    return r;
}

SuiteOutput suite_census(const RunConfig& cfg) {
    SuiteOutput o;
    int n = need_n(cfg, 4, 1, 8);
    o.n = n;
    o.report = Report("census");
    const std::map<int, std::vector<uint64_t>> known{{1, {1}}, {2, {1, 1}}, {3, {1, 4, 3}}};
    for (int m = 1; m <= n; ++m) {
        auto c = tree_counts_by_k(m);
        uint64_t total = 0;
        for (auto v : c) total += v;
        o.report.info["counts_n" + std::to_string(m)] = json(c).dump();
        o.report.expect(total == enumerate_trees(m).size(), "n=" + std::to_string(m) + " total mismatch");
        o.report.expect(c.back() == double_factorial_odd(m), "n=" + std::to_string(m) + " top count");
        if (auto it = known.find(m); it != known.end())
            o.report.expect(c == it->second, "n=" + std::to_string(m) + " counts " + json(c).dump());
        if (m == 4) o.report.expect(total == 58, "n=4 total " + std::to_string(total));
    }
    return o;
}

SuiteOutput suite_roundtrip(const RunConfig& cfg) {
    int vars = cfg.vars.value_or(2), order = cfg.order.value_or(10);
    need_range("--vars", vars, 1, 4);
    need_range("--order", order, 1, 12);
    auto o = seeded(cfg, "roundtrip", 20, [&](uint64_t seed) {
        Rng rng(seed);
        QSeries f = random_series(rng, vars, order);
        Report r("roundtrip");
        QSeries g = plethystic_exp(f);
        int a = QSeries::first_mismatch(plethystic_log(g), f);
        r.expect(a < 0, "log(exp f) differs at q^" + std::to_string(a));
        int b = QSeries::first_mismatch(plethystic_exp(plethystic_log(g)), g);
        r.expect(b < 0, "exp(log g) differs at q^" + std::to_string(b));
        return r;
    });
    o.parameters["vars"] = vars;
    o.parameters["order"] = order;
    return o;
}

SuiteOutput suite_molien(const RunConfig& cfg) {
    SuiteOutput o;
    int order = cfg.order.value_or(8);
    need_range("--order", order, 1, 12);
    o.parameters["order"] = order;
    o.report = Report("molien");
    LaurentPoly t = LaurentPoly::variable(1, 0);
    LaurentPoly one(1, 1);
    QSeries f = QSeries::q_power(order, 1, RatFun(one, one - t));
    QSeries e = plethystic_exp(f);
    LaurentPoly den = one;
    for (int k = 1; k <= order; ++k) {
        den = den * (one - t.pow(static_cast<unsigned>(k)));
        o.report.expect(e[k] == RatFun(one, den), "q^" + std::to_string(k) + ": " + e[k].str());
    }
    return o;
}

SuiteOutput suite_charlemma(const RunConfig& cfg) {
    int vars = cfg.vars.value_or(2);
    need_range("--vars", vars, 1, 3);
    need_range("--n-max", cfg.n_max, 1, 5);
    int order = cfg.order.value_or(5);
    need_range("--order", order, 1, 8);
    auto o = seeded(cfg, "charlemma", 10, [&](uint64_t seed) {
        Rng rng(seed);
        auto p = random_presentation(rng, cfg.n_max, vars);
        return verify_character_lemma(p, order).report;
    });
    o.parameters["vars"] = vars;
    o.parameters["n_max"] = cfg.n_max;
    o.parameters["order"] = order;
    return o;
}

SuiteOutput suite_strictify(const RunConfig& cfg) {
    int vars = cfg.vars.value_or(2);
    need_range("--vars", vars, 1, 3);
    need_range("--dims", cfg.dims, 1, 2);
    if (cfg.n) need_range("--n", *cfg.n, 1, 3);
    if (cfg.points) need_range("--points", *cfg.points, 1, 3);
    auto o = seeded(cfg, "strictify", 10, [&](uint64_t seed) {
        Rng rng(seed);
        int np = cfg.points.value_or(rng.range(1, 3));
        int n = cfg.n.value_or(rng.range(1, 3));
        LocalDatum d = random_datum(rng, np, n, vars, cfg.dims);
        auto space = build_space(n, d.xs);
        System sys = system_from_local_datum(d, space);
        if (cfg.gauge) sys = gauge(sys, rng);
        Report r("strictify");
        r.info["n"] = std::to_string(n);
        r.info["points"] = std::to_string(np);
        Report in = check_system(sys);
        r.expect(in.pass, "input system: " + in.witness);
        StrictifyResult st = strictify(sys);
        r.absorb(st.report);
        r.info["entries"] = std::to_string(st.entries.size());
        r.info["steps"] = std::to_string(st.steps);
        System strict = assemble_strict(space, vars, st.entries);
        Report out = check_system(strict);
        r.expect(out.pass, "assembled system: " + out.witness);
        std::string kt = compare_traces(*space, k_traces(sys), k_traces(st.entries));
        r.expect(kt.empty(), "signed K-class differs at " + kt);
        return r;
    });
    o.parameters["vars"] = vars;
    o.parameters["dims"] = cfg.dims;
    return o;
}

SuiteOutput suite_main(const RunConfig& cfg) {
    int vars = cfg.vars.value_or(2);
    need_range("--vars", vars, 1, 3);
    need_range("--n-max", cfg.n_max, 1, 4);
    need_range("--dims", cfg.dims, 1, 2);
    if (cfg.points) need_range("--points", *cfg.points, 1, 3);
    auto o = seeded(cfg, "main", 5, [&](uint64_t seed) {
        Rng rng(seed);
        int np = cfg.points.value_or(rng.range(1, 3));
        LocalDatum d = random_datum(rng, np, cfg.n_max, vars, cfg.dims);
        MainOptions opt;
        opt.n_max = cfg.n_max;
        if (cfg.gauge) opt.gauge_seed = seed;
        MainResult res = verify_main(d, opt);
        res.report.info["points"] = std::to_string(np);
        return res.report;
    });
    o.parameters["vars"] = vars;
    o.parameters["n_max"] = cfg.n_max;
    o.parameters["dims"] = cfg.dims;
    if (cfg.points) o.parameters["points"] = *cfg.points;
    return o;
}

SuiteOutput suite_bridge(const RunConfig& cfg) {
    int vars = cfg.vars.value_or(2);
    need_range("--vars", vars, 1, 3);
    need_range("--n-max", cfg.n_max, 1, 5);
    auto o = seeded(cfg, "bridge", 5, [&](uint64_t seed) {
        Rng rng(seed);
        auto p = random_presentation(rng, cfg.n_max, vars);
        Report r("bridge");
        for (int m = 1; m <= cfg.n_max; ++m) {
            Report b = verify_bridge(p.F, m, vars);
            b.check = "n=" + std::to_string(m);
            r.absorb(b);
        }
        return r;
    });
    o.parameters["vars"] = vars;
    o.parameters["n_max"] = cfg.n_max;
    return o;
}

const std::map<std::string, std::function<SuiteOutput(const RunConfig&)>>& suites() {
    static const std::map<std::string, std::function<SuiteOutput(const RunConfig&)>> m{
        {"d2", suite_d2},
        {"equivariance", suite_equivariance},
        {"gluing", suite_gluing},
        {"logformula", suite_logformula},
        {"psi", suite_psi},
        {"axioms", suite_axioms},
        {"census", suite_census},
        {"roundtrip", suite_roundtrip},
        {"molien", suite_molien},
        {"charlemma", suite_charlemma},
        {"strictify", suite_strictify},
        {"main", suite_main},
        {"bridge", suite_bridge},
    };
    return m;
}

QSeries read_series(const RunConfig& cfg) {
    int order = cfg.order.value_or(8);
    need_range("--order", order, 0, 30);
    std::string text = read_input(cfg.input);
    try {
        return parse_series(text, order, cfg.vars.value_or(-1));
    } catch (const ParseError& e) {
        throw BadInput(std::string("parse error: ") + e.what());
    }
}

json label_family(const IndexTree& t) {
    json a = json::array();
    for (const auto& l : t.labels()) a.push_back(l.members());
    return a;
}

// Orbit representative: the smallest tree in the S_n-orbit.
IndexTree orbit_min(const IndexTree& t, const std::vector<Permutation>& perms) {
    IndexTree best = t;
    for (const auto& s : perms) {
        IndexTree u = act_tree(s, t);
        if (u < best) best = u;
    }
    return best;
}

}  // namespace

int cmd_exp(const RunConfig& cfg, std::ostream& out) {
    QSeries f = read_series(cfg);
    if (!f[0].is_zero()) throw BadInput("exp needs a series without constant term");
    out << plethystic_exp(f).str() << "\n";
    return kPass;
}

int cmd_log(const RunConfig& cfg, std::ostream& out) {
    QSeries g = read_series(cfg);
    if (!(g[0] == RatFun(1))) throw BadInput("log needs constant term 1");
    out << plethystic_log(g).str() << "\n";
    return kPass;
}

int cmd_trees(const RunConfig& cfg, std::ostream& out) {
    int n = need_n(cfg, 3, 1, 8);
    if (cfg.counts) {
        out << json(tree_counts_by_k(n)).dump() << "\n";
        return kPass;
    }
    if (cfg.orbits) {
        if (n > 6) throw BadInput("--orbits needs n <= 6");
        auto perms = all_permutations(n);
        std::vector<uint64_t> by_k(static_cast<size_t>(n), 0);
        std::set<IndexTree> seen;
        for (const auto& t : enumerate_trees(n))
            if (seen.insert(orbit_min(t, perms)).second) ++by_k[static_cast<size_t>(t.k())];
        out << json(by_k).dump() << "\n";
        return kPass;
    }
    auto trees = enumerate_trees(n);
    if (cfg.format == "json") {
        json j;
        j["schema"] = 1;
        j["n"] = n;
        j["trees"] = json::array();
        for (const auto& t : trees) j["trees"].push_back(label_family(t));
        out << j.dump() << "\n";
    } else if (cfg.format == "graph") {
        for (size_t i = 0; i < trees.size(); ++i) {
            out << "# tree " << i << " k=" << trees[i].k() << "\n" << trees[i].graph();
            if (i + 1 < trees.size()) out << "\n";
        }
    } else {
        for (const auto& t : trees) out << t.str() << "\n";
    }
    return kPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto& m = suites();
    auto it = m.find(cfg.suite);
    if (it == m.end()) throw BadInput("unknown suite '" + cfg.suite + "'");
    SuiteOutput o = it->second(cfg);
    if (cfg.format == "json") {
        json j;
        j["schema"] = 1;
        j["check"] = cfg.suite;
        if (o.n) {
            j["n"] = *o.n;
        } else {
            j["n"] = nullptr;
        }
        j["parameters"] = o.parameters;
        j["status"] = o.report.pass ? "PASS" : "FAIL";
        j["witness"] = o.report.witness;
        j["cases"] = o.report.cases;
        j["failures"] = o.report.failures;
        if (!o.report.info.empty()) j["info"] = o.report.info;
        if (!o.runs.empty()) j["runs"] = o.runs;
        out << j.dump(2) << "\n";
    } else {
        out << cfg.suite << ": " << (o.report.pass ? "PASS" : "FAIL") << " cases=" << o.report.cases
            << " failures=" << o.report.failures << "\n";
        if (!o.report.pass) out << "witness: " << o.report.witness << "\n";
        for (const auto& [k, v] : o.report.info) out << k << ": " << v << "\n";
        for (const auto& r : o.runs)
            out << "seed " << r["seed"].get<uint64_t>() << ": " << r["status"].get<std::string>() << "\n";
    }
    return o.report.pass ? kPass : kFail;
}

}  // namespace pleth::cli
