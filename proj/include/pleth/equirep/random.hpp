#pragma once

#include "pleth/coeffring/rng.hpp"
#include "pleth/equirep/locexp.hpp"

namespace pleth {

Exponent random_weight(Rng& rng, int nvars, int bound);

// Permutation representation of S_m on the k-subsets of [m], possibly twisted
// by the sign character, with one weight and parity for all basis vectors.
WeightedSheaf subset_rep(int m, int k, bool sign_twist, const Exponent& w, int parity, int nvars);
// Direct sum of one or two random subset representations.
WeightedSheaf random_rep(Rng& rng, int m, int nvars);
// Nonzero-character space of dimension 1 or 2.
WeightedSpace random_denominator(Rng& rng, int nvars);
// F_1..F_nmax each present with probability 3/4; D random.
QuotientPresentation random_presentation(Rng& rng, int nmax, int nvars);

}  // namespace pleth
