#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace pleth::cli;

int main(int argc, char** argv) {
    CLI::App app{"Exact plethystic computations and verification suites"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* c) {
        c->add_option("--format", cfg.format, "text, json or graph")
            ->check(CLI::IsMember({"text", "json", "graph"}));
        c->add_option("-o,--output", cfg.output, "write to a file instead of stdout");
    };

    auto* exp = app.add_subcommand("exp", "plethystic exponential of a series file");
    auto* log = app.add_subcommand("log", "plethystic logarithm of a series file");
    for (auto* c : {exp, log}) {
        c->add_option("file", cfg.input, "series file, - for stdin")->required();
        c->add_option("--order", cfg.order, "truncation order N");
        c->add_option("--vars", cfg.vars, "number of variables (inferred by default)");
        add_common(c);
    }

    auto* trees = app.add_subcommand("trees", "enumerate index trees");
    trees->add_option("--n", cfg.n, "order of the trees");
    trees->add_flag("--counts", cfg.counts, "print counts by number of internal labels");
    trees->add_flag("--orbits", cfg.orbits, "print S_n-orbit counts by number of internal labels");
    add_common(trees);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify
        ->add_option("suite", cfg.suite,
                     "d2, equivariance, gluing, logformula, psi, axioms, census, roundtrip, molien, "
                     "charlemma, strictify, main or bridge")
        ->required();
    verify->add_option("--n", cfg.n, "size bound");
    verify->add_option("--n-max", cfg.n_max, "largest degree");
    verify->add_option("--order", cfg.order, "series truncation order");
    verify->add_option("--vars", cfg.vars, "number of torus variables");
    verify->add_option("--seed", cfg.seed, "first seed");
    verify->add_option("--count", cfg.count, "number of consecutive seeds");
    verify->add_option("--points", cfg.points, "number of points of X");
    verify->add_option("--dims", cfg.dims, "largest fiber dimension");
    verify->add_option("--workers", cfg.workers, "worker threads");
    verify->add_flag("--gauge,!--no-gauge", cfg.gauge, "conjugate random systems by random bases");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kBadInput;
    }

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            std::cerr << "error: cannot write " << cfg.output << "\n";
            return kBadInput;
        }
    }
    std::ostream& out = cfg.output.empty() ? std::cout : file;

    try {
        if (exp->parsed()) {
            cfg.command = "exp";
            return cmd_exp(cfg, out);
        }
        if (log->parsed()) {
            cfg.command = "log";
            return cmd_log(cfg, out);
        }
        if (trees->parsed()) {
            cfg.command = "trees";
            if (cfg.format == "json" && !trees->count("--format")) cfg.format = "text";
            return cmd_trees(cfg, out);
        }
        cfg.command = "verify";
        return cmd_verify(cfg, out);
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}
