#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pleth/coeffring/matrix.hpp"
#include "pleth/equirep/group.hpp"
#include "pleth/equirep/space.hpp"

namespace pleth {

// Equivariant weighted sheaf on a finite G-set. The carrier is {0..points-1}
// with action table act(g, p); map(g, p) goes from fiber(p) to fiber(g p).
// Cocycle: map(gh, p) = map(g, h p) * map(h, p).
class WeightedSheaf {
public:
    using GroupPtr = std::shared_ptr<const PermGroup>;

    WeightedSheaf() = default;
    WeightedSheaf(GroupPtr group, int nvars, std::vector<std::vector<int>> act, std::vector<WeightedSpace> fibers,
                  std::vector<std::vector<Matrix>> maps);
    // Single-point carrier with the given representation matrices, one per
    // group element in group order.
    static WeightedSheaf on_point(GroupPtr group, WeightedSpace fiber, std::vector<Matrix> rho);
    static WeightedSheaf trivial_on_point(GroupPtr group, WeightedSpace fiber);

    const GroupPtr& group() const { return group_; }
    int nvars() const { return nvars_; }
    int points() const { return static_cast<int>(fibers_.size()); }
    int act(int g, int p) const { return act_[static_cast<size_t>(g)][static_cast<size_t>(p)]; }
    const WeightedSpace& fiber(int p) const { return fibers_[static_cast<size_t>(p)]; }
    const Matrix& map(int g, int p) const { return maps_[static_cast<size_t>(g)][static_cast<size_t>(p)]; }
    int total_dim() const;

    // Empty string when the sheaf satisfies the action, cocycle and
    // homogeneity conditions; otherwise a description of the first failure.
    std::string check() const;

    LaurentPoly trace(const Permutation& s) const;
    LaurentPoly trace_at(int g) const;
    WeightedSheaf shifted() const;  // parity flip of every fiber
    WeightedSheaf sign_twisted() const;  // maps multiplied by sign(g)

private:
    GroupPtr group_;
    int nvars_ = 0;
    std::vector<std::vector<int>> act_;
    std::vector<WeightedSpace> fibers_;
    std::vector<std::vector<Matrix>> maps_;
};

// Carrier product for single-point sheaves, fiberwise tensor otherwise; both
// sheaves must share carrier and group.
WeightedSheaf tensor(const WeightedSheaf& f, const WeightedSheaf& g);
WeightedSheaf direct_sum(const WeightedSheaf& f, const WeightedSheaf& g);
// Induction from f's group H to a supergroup G by explicit coset enumeration.
WeightedSheaf induce(const WeightedSheaf& f, const WeightedSheaf::GroupPtr& big);
// Restriction to a subgroup.
WeightedSheaf restrict(const WeightedSheaf& f, const WeightedSheaf::GroupPtr& small);
// Image of the averaging projector on the total space.
WeightedSpace invariants(const WeightedSheaf& f);

}  // namespace pleth
