#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pleth/coeffring/laurent.hpp"
#include "pleth/combinat/partition.hpp"
#include "pleth/equirep/group.hpp"

namespace pleth {

struct XPoint {
    std::string id;
    Exponent weight;
};

// The finite space X^n stratified by coincidence type. A point is an n-tuple
// of indices into X; its type is the partition of [n] into positions carrying
// equal entries. U_alpha is the open set of points whose type refines alpha.
class StratSpace {
public:
    StratSpace(int n, std::vector<XPoint> xs);  // throws on duplicate ids

    int n() const { return n_; }
    int num_x() const { return static_cast<int>(xs_.size()); }
    const std::vector<XPoint>& xs() const { return xs_; }
    int points() const { return static_cast<int>(coords_.size()); }
    const std::vector<int>& coords(int x) const { return coords_[static_cast<size_t>(x)]; }
    int point_of(const std::vector<int>& c) const;
    std::string point_str(int x) const;  // "(p,q,p)"

    const PartitionIndex& partitions() const { return pix_; }
    const std::shared_ptr<const PermGroup>& group() const { return group_; }
    int num_partitions() const { return pix_.count(); }

    int type(int x) const { return type_[static_cast<size_t>(x)]; }
    int act(int g, int x) const { return act_[static_cast<size_t>(g)][static_cast<size_t>(x)]; }
    int act_partition(int g, int i) const { return pact_[static_cast<size_t>(g)][static_cast<size_t>(i)]; }
    bool in_u(int x, int alpha) const { return pix_.refines(type(x), alpha); }
    // phi_{i,j} lives at x when i ~ j for the type of x.
    bool linked(int i, int j, int x) const { return pix_.sim(i, j, type(x)); }
    const std::vector<int>& stratum(int alpha) const { return strata_[static_cast<size_t>(alpha)]; }
    bool on_diagonal(int x) const { return type(x) == pix_.one_block(); }
    std::vector<int> diagonal() const;

    // Strata partition the points, closures are unions of strata and the
    // action permutes strata compatibly. Empty string when all hold.
    std::string check() const;

private:
    int n_;
    std::vector<XPoint> xs_;
    PartitionIndex pix_;
    std::shared_ptr<const PermGroup> group_;
    std::vector<std::vector<int>> coords_;
    std::vector<int> type_;
    std::vector<std::vector<int>> act_;
    std::vector<std::vector<int>> pact_;
    std::vector<std::vector<int>> strata_;
};

using SpacePtr = std::shared_ptr<const StratSpace>;

SpacePtr build_space(int n, std::vector<XPoint> xs);
// Points named p1, p2, ... with the given weights.
std::vector<XPoint> named_points(const std::vector<Exponent>& weights);

}  // namespace pleth
