#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pleth/coeffring/matrix.hpp"
#include "pleth/common/report.hpp"
#include "pleth/equirep/space.hpp"
#include "pleth/stratsys/space.hpp"

namespace pleth {

// Equivariant system of sheaves on a StratSpace, indexed by set partitions
// (indices into the space's PartitionIndex). Fibers and maps are stored per
// point. phi(i, j, x) exists for i refining j; in a non-strict system only
// on U_{i,j} (points x with i ~ j for the type of x), in a strict system
// everywhere. rho(g, i, x) goes from fiber(i, x) to fiber(g i, g x).
class System {
public:
    System() = default;
    System(SpacePtr space, int nvars, bool strict);  // zero system

    const SpacePtr& space() const { return space_; }
    const StratSpace& sp() const { return *space_; }
    int nvars() const { return nvars_; }
    bool strict() const { return strict_; }
    void set_strict(bool s) { strict_ = s; }
    int num_objects() const { return sp().num_partitions(); }

    const WeightedSpace& fiber(int i, int x) const { return fibers_[idx(i, x)]; }
    void set_fiber(int i, int x, WeightedSpace v) { fibers_[idx(i, x)] = std::move(v); }

    // Ordered pairs i refining j, in (i, j) order.
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int pair_id(int i, int j) const { return pair_id_[static_cast<size_t>(i * num_objects() + j)]; }
    // True where phi(i, j, x) must be present.
    bool domain(int i, int j, int x) const { return strict_ || sp().linked(i, j, x); }
    const Matrix* phi(int i, int j, int x) const;
    void set_phi(int i, int j, int x, Matrix m);

    const Matrix& rho(int g, int i, int x) const { return rho_[static_cast<size_t>(g)][idx(i, x)]; }
    void set_rho(int g, int i, int x, Matrix m) { rho_[static_cast<size_t>(g)][idx(i, x)] = std::move(m); }

    // Points where some object has a nonzero fiber.
    std::vector<int> support() const;
    bool is_zero() const { return support().empty(); }

private:
    size_t idx(int i, int x) const { return static_cast<size_t>(i * sp().points() + x); }

    SpacePtr space_;
    int nvars_ = 0;
    bool strict_ = false;
    std::vector<WeightedSpace> fibers_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> pair_id_;
    std::vector<std::vector<std::optional<Matrix>>> phi_;  // [pair][x]
    std::vector<std::vector<Matrix>> rho_;                 // [g][i * points + x]
};

// Checks for a non-strict system: domains, (C1) identities, (C2) composition
// on overlaps, homogeneity, equivariance squares and the rho cocycle. For a
// strict system: (D1) functoriality everywhere, (D2) identities, (D3)
// invertibility on U_{i,j}, plus the same equivariance checks.
Report check_system(const System& s, bool equivariance = true);

// Morphism of systems: m[i][x] maps src.fiber(i, x) to dst.fiber(i, x).
struct SystemMorphism {
    std::vector<std::vector<Matrix>> m;
};
Report check_morphism(const System& src, const System& dst, const SystemMorphism& f);

// Fiberwise kernel and cokernel. Kernel bases come from non-pivot columns and
// cokernel bases from the standard vectors outside the image, lowest index
// first, so the result is deterministic.
System kernel(const System& src, const System& dst, const SystemMorphism& f);
System cokernel(const System& src, const System& dst, const SystemMorphism& f);

System direct_sum(const System& a, const System& b);
System parity_shifted(const System& a);

// Columns of `vs` expressed in the basis given by the columns of `basis`;
// throws if some column is outside the span.
Matrix solve_in_basis(const Matrix& basis, const Matrix& vs);
bool is_invertible(const Matrix& m);

}  // namespace pleth
