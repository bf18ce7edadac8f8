#include "pleth/stratsys/space.hpp"

#include <set>
#include <stdexcept>

namespace pleth {

StratSpace::StratSpace(int n, std::vector<XPoint> xs)
    : n_(n), xs_(std::move(xs)), pix_(n), group_(symmetric_group(n)) {
    std::set<std::string> ids;
    for (const auto& p : xs_)
        if (!ids.insert(p.id).second) throw std::invalid_argument("duplicate point identifier " + p.id);
    int m = num_x();
    int total = 1;
    for (int i = 0; i < n; ++i) total *= m;
    if (m == 0) total = 0;
    coords_.resize(static_cast<size_t>(total));
    for (int x = 0; x < total; ++x) {
        std::vector<int> c(static_cast<size_t>(n));
        int r = x;
        for (int i = n - 1; i >= 0; --i) {
            c[static_cast<size_t>(i)] = r % m;
            r /= m;
        }
        coords_[static_cast<size_t>(x)] = std::move(c);
    }
    strata_.resize(static_cast<size_t>(pix_.count()));
    for (int x = 0; x < total; ++x) {
        std::vector<int> labels;
        for (int v : coords(x)) labels.push_back(v);
        int t = pix_.index_of(SetPartition::from_labels(labels));
        type_.push_back(t);
        strata_[static_cast<size_t>(t)].push_back(x);
    }
    act_.resize(static_cast<size_t>(group_->order()));
    pact_.resize(static_cast<size_t>(group_->order()));
    for (int g = 0; g < group_->order(); ++g) {
        const Permutation& s = group_->at(g);
        Permutation si = s.inverse();
        for (int x = 0; x < total; ++x) {
            // (s x)_i = x_{s^{-1}(i)}
            std::vector<int> c(static_cast<size_t>(n));
            for (int i = 1; i <= n; ++i) c[static_cast<size_t>(i - 1)] = coords(x)[static_cast<size_t>(si(i) - 1)];
            act_[static_cast<size_t>(g)].push_back(point_of(c));
        }
        pact_[static_cast<size_t>(g)] = pix_.action_table(s);
    }
}

int StratSpace::point_of(const std::vector<int>& c) const {
    int x = 0;
    for (int v : c) x = x * num_x() + v;
    return x;
}

std::string StratSpace::point_str(int x) const {
    std::string r = "(";
    for (size_t i = 0; i < coords(x).size(); ++i) r += (i ? "," : "") + xs_[static_cast<size_t>(coords(x)[i])].id;
    return r + ")";
}

std::vector<int> StratSpace::diagonal() const { return stratum(pix_.one_block()); }

std::string StratSpace::check() const {
    std::vector<int> seen(static_cast<size_t>(points()), 0);
    for (int a = 0; a < pix_.count(); ++a)
        for (int x : stratum(a)) ++seen[static_cast<size_t>(x)];
    for (int x = 0; x < points(); ++x)
        if (seen[static_cast<size_t>(x)] != 1) return "point " + point_str(x) + " not in exactly one stratum";
    // The closure of a stratum is the set of points of coarser type: a union of
    // strata as long as type is constant on strata.
    for (int a = 0; a < pix_.count(); ++a)
        for (int x : stratum(a))
            if (type(x) != a) return "stratum of " + pix_.at(a).str() + " contains a point of another type";
    for (int g = 0; g < group_->order(); ++g)
        for (int x = 0; x < points(); ++x)
            if (type(act(g, x)) != act_partition(g, type(x)))
                return "action does not permute strata at " + point_str(x);
    return {};
}

SpacePtr build_space(int n, std::vector<XPoint> xs) { return std::make_shared<const StratSpace>(n, std::move(xs)); }

std::vector<XPoint> named_points(const std::vector<Exponent>& weights) {
    std::vector<XPoint> out;
    for (size_t i = 0; i < weights.size(); ++i) out.push_back({"p" + std::to_string(i + 1), weights[i]});
    return out;
}

}  // namespace pleth
