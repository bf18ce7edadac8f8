#pragma once

#include <vector>

#include "pleth/coeffring/rng.hpp"
#include "pleth/equirep/locexp.hpp"
#include "pleth/stratsys/system.hpp"

namespace pleth {

// Local data of a factorisable sequence on a finite X: for each point p and
// m >= 1 a representation V_{p,m} of S_m (reps[p][m-1]); a default sheaf is
// the zero space.
struct LocalDatum {
    int nvars = 0;
    std::vector<XPoint> xs;
    std::vector<RepSequence> reps;

    int max_degree() const;
    // V_{p,m}, or nullptr when absent.
    const WeightedSheaf* v(int p, int m) const;
};

// F_A at x is the tensor product over the blocks K of meet(A, type(x)), in
// binary order, of V_{x_K, |K|}. On U_{A,B} the two factor lists coincide and
// phi is the identity. rho moves each factor by the permutation induced on
// its block and restores binary order with Koszul signs.
System system_from_local_datum(const LocalDatum& d, const SpacePtr& space);

// V_{p,m} = trivial even line of weight m * w_p.
LocalDatum structure_datum(const std::vector<XPoint>& xs, int nmax, int nvars);
// V_{p,1} = line of weight w_p, V_{p,m} = 0 for m >= 2.
LocalDatum exterior_datum(const std::vector<XPoint>& xs, int nvars);
// Random representations of dimension at most max_dim: lines (trivial or sign,
// either parity), the permutation representation of S_2, or sums of two lines.
LocalDatum random_datum(Rng& rng, int npoints, int nmax, int nvars, int max_dim = 2);

// Same system in new bases: conjugate every map by random invertible
// homogeneous matrices, chosen independently per object and point.
System gauge(const System& s, Rng& rng);

}  // namespace pleth
