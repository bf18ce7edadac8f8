#pragma once

#include <memory>
#include <vector>

#include "pleth/common/report.hpp"
#include "pleth/stratsys/system.hpp"
#include "pleth/treecx/tree.hpp"

namespace pleth {

// Fiber of G_n at one point: C^k is the sum over trees with k internal labels
// of the fiber of F'_{A(T)}, parity shifted by k. d[k] : C^k -> C^{k-1}.
struct PointComplex {
    std::vector<WeightedSpace> c;
    std::vector<std::vector<int>> offset;  // offset[k][t] = first row of tree t
    std::vector<Matrix> d;                 // d[0] is unused
};

struct GnComplex {
    int n = 0;
    std::shared_ptr<const System> system;  // the strict system
    std::vector<std::vector<IndexTree>> trees;  // trees[k], sorted
    std::vector<PointComplex> points;

    const StratSpace& sp() const { return system->sp(); }
    int tree_index(int k, const IndexTree& t) const;
};

// Assembles the complex at every point from the strict system and checks
// d o d = 0 numerically; throws std::runtime_error naming the point and the
// trees on failure.
GnComplex build_gn(const System& strict);

// rho_{T,g} = (-1)^{l(T,g)} rho_{A(T),g}, as a map C^k(x) -> C^k(g x).
Matrix gn_action(const GnComplex& cx, int g, int x, int k);
Report check_gn_equivariance(const GnComplex& cx);

struct PointCohomology {
    std::vector<int> dims;           // per k
    std::vector<LaurentPoly> chars;  // graded character of H^k, parity shift included
    LaurentPoly euler_chain;         // sum of the characters of the C^k
};
PointCohomology point_cohomology(const GnComplex& cx, int x);

// Checks, for the psi order attached to the two blocks (b1 binary-smaller
// unless swapped): no component of d raises psi, the psi-preserving
// components pair up all trees, and each paired block of d is invertible at
// every point of U_B. info["levels"] is the number of distinct psi values.
Report filtration_check(const GnComplex& cx, const SetPartition& b, bool swapped = false);

}  // namespace pleth
