#pragma once

#include <vector>

#include "pleth/mainthm/complex.hpp"

namespace pleth {

// Cohomology of G_n at one point of the small diagonal with its S_n-action.
struct DiagonalFiber {
    int point = -1;
    std::vector<WeightedSpace> h;             // h[k], parity as in C^k
    std::vector<std::vector<Matrix>> action;  // action[g][k]
};

struct DiagonalSheaf {
    int n = 0;
    std::vector<DiagonalFiber> fibers;  // one per point of X, in X order
};

// Fails hard (std::runtime_error naming the point) if cohomology is nonzero
// at some point off the diagonal.
DiagonalSheaf extract_hn(const GnComplex& cx);

// Graded character of the S_n-invariants of one fiber.
LaurentPoly invariant_character(const DiagonalFiber& f, int n);
// chi(X, E_n): sum of invariant characters over X.
LaurentPoly en_character(const DiagonalSheaf& h);
// Hopf trace cross-check: averaged chain-level supertraces at a diagonal point.
LaurentPoly invariant_euler_chain(const GnComplex& cx, int x);

}  // namespace pleth
