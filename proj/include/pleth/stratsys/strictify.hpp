#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pleth/coeffring/laurent.hpp"
#include "pleth/stratsys/system.hpp"

namespace pleth {

// D_alpha: at points of the stratum of alpha, the image of the sum of
// phi_{k,i} over k refining i with k ~_alpha i; zero elsewhere. Maps are the
// induced ones when i ~_alpha j and zero otherwise. The result is strict and
// equivariant for the stabilizer of alpha only, so rho is left zero off it.
System functor_d(const System& s, int alpha);
// D~_alpha: sum of D_beta over the orbit of alpha, with its S_n-structure.
System functor_d_tilde(const System& s, int alpha);
// I~_alpha : s -> D~_alpha(s), restriction onto the orbit strata.
SystemMorphism morphism_i_tilde(const System& s, const System& dt, int alpha);
std::vector<int> orbit_of(const StratSpace& sp, int alpha);

// 0 if every object vanishes on U_alpha, 1 if the nonzero part on U_alpha lies
// in the stratum of alpha, and a large value otherwise. Without nilpotents
// the thickening order never exceeds 1, so "more than 1" means unbounded.
inline constexpr int kInfiniteMeasure = 1 << 30;
int support_measure(const System& s, int alpha);

struct SignedEntry {
    System system;
    int multiplicity;
    int alpha;  // partition index the entry was built from
};

struct StrictifyResult {
    std::vector<SignedEntry> entries;
    Report report;  // (D1)-(D3) per entry, support shrinking, termination
    int steps = 0;
};

StrictifyResult strictify(const System& s);
// Direct sum of the entries, each |multiplicity| times; negative entries are
// parity shifted.
System assemble_strict(const SpacePtr& space, int nvars, const std::vector<SignedEntry>& entries);

// Supertrace of rho(g, i, x) for every (i, x, g) with g fixing both i and x.
using KTraces = std::map<std::tuple<int, int, int>, LaurentPoly>;
KTraces k_traces(const System& s);
KTraces k_traces(const std::vector<SignedEntry>& entries);
// Empty string when equal, else the first differing key.
std::string compare_traces(const StratSpace& sp, const KTraces& a, const KTraces& b);

}  // namespace pleth
