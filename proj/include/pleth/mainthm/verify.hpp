#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pleth/coeffring/qseries.hpp"
#include "pleth/common/report.hpp"
#include "pleth/stratsys/datum.hpp"

namespace pleth {

struct MainOptions {
    int n_max = 4;
    std::optional<uint64_t> gauge_seed;  // conjugate the system by random bases first
    bool filtration = true;              // run the psi-filtration check for every B
};

struct MainResult {
    Report report;
    QSeries lhs;       // 1 + sum chi(Sym^n X, F_n) q^n
    QSeries e_series;  // sum chi(X, E_n) q^n
    QSeries rhs;       // Exp(e_series)
};

// chi(Sym^n X, F_n): one representative per multiset of points, invariants
// of F_[n] under its stabilizer.
LaurentPoly sym_power_character(const System& s);
QSeries lhs_series(const LocalDatum& d, int n_max);

// Runs datum -> system -> strictification -> G_n -> cohomology -> E_n for
// every n <= n_max and compares both sides of the generating-function
// identity exactly.
MainResult verify_main(const LocalDatum& d, const MainOptions& opt);

}  // namespace pleth
