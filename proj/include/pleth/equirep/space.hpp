#pragma once

#include <vector>

#include "pleth/coeffring/laurent.hpp"
#include "pleth/coeffring/matrix.hpp"

namespace pleth {

struct BasisVector {
    Exponent weight;
    int parity = 0;  // 0 even, 1 odd

    friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

// Finite-dimensional Z/2-graded space with a torus weight on each basis vector.
struct WeightedSpace {
    int nvars = 0;
    std::vector<BasisVector> basis;

    WeightedSpace() = default;
    WeightedSpace(int nv, std::vector<BasisVector> b) : nvars(nv), basis(std::move(b)) {}
    static WeightedSpace line(int nvars, const Exponent& w = {}, int parity = 0);
    static WeightedSpace zero(int nvars) { return {nvars, {}}; }

    int dim() const { return static_cast<int>(basis.size()); }
    // Graded character: sum of (-1)^parity t^weight.
    LaurentPoly character() const;
    WeightedSpace shifted() const;  // parity flipped
    WeightedSpace twisted(const Exponent& w) const;  // all weights moved by w

    friend bool operator==(const WeightedSpace&, const WeightedSpace&) = default;
};

WeightedSpace tensor(const WeightedSpace& a, const WeightedSpace& b);
WeightedSpace tensor_all(const std::vector<WeightedSpace>& factors, int nvars);
WeightedSpace direct_sum(const WeightedSpace& a, const WeightedSpace& b);

// Graded character of a linear endomorphism: sum over i of
// (-1)^parity_i t^weight_i m(i, i).
LaurentPoly supertrace(const WeightedSpace& v, const Matrix& m);

// Isomorphism V_1 (x) ... (x) V_l -> V_{p(1)} (x) ... (x) V_{p(l)}, where the
// output factor at position j is input factor order[j]. Basis vectors go to
// basis vectors with the Koszul sign of the induced shuffle of odd vectors.
Matrix koszul_reorder(const std::vector<WeightedSpace>& factors, const std::vector<int>& order);

// True when every nonzero entry of m joins basis vectors of equal weight and
// parity.
bool is_homogeneous(const Matrix& m, const WeightedSpace& src, const WeightedSpace& dst);

}  // namespace pleth
