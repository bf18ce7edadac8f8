#include "pleth/equirep/classfn.hpp"

#include <algorithm>
#include <stdexcept>

namespace pleth {

ClassFunction::ClassFunction(int n) : n_(n), classes_(enumerate_int_partitions(n)), values_(classes_.size()) {}

const RatFun& ClassFunction::operator[](const IntPartition& lambda) const {
    auto it = std::find(classes_.begin(), classes_.end(), lambda);
    if (it == classes_.end()) throw std::invalid_argument("not a partition of " + std::to_string(n_));
    return values_[static_cast<size_t>(it - classes_.begin())];
}

RatFun& ClassFunction::operator[](const IntPartition& lambda) {
    return const_cast<RatFun&>(static_cast<const ClassFunction&>(*this)[lambda]);
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (n_ != o.n_) throw std::invalid_argument("class functions of different degree");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("class functions of different degree");
    ClassFunction r(a.n_);
    for (size_t i = 0; i < r.values_.size(); ++i) r.values_[i] = a.values_[i] * b.values_[i];
    return r;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
    if (a.n_ != b.n_) return false;
    for (size_t i = 0; i < a.values_.size(); ++i)
        if (!(a.values_[i] == b.values_[i])) return false;
    return true;
}

RatFun ClassFunction::invariant_part() const {
    uint64_t fact = 1;
    for (int i = 2; i <= n_; ++i) fact *= static_cast<uint64_t>(i);
    RatFun s;
    for (size_t i = 0; i < classes_.size(); ++i) {
        if (values_[i].is_zero()) continue;
        s += values_[i] * RatFun(Rational(static_cast<long>(count_cycle_type(classes_[i])), static_cast<long>(fact)));
    }
    return s;
}

std::string ClassFunction::str() const {
    std::string s;
    for (size_t i = 0; i < classes_.size(); ++i) {
        if (i) s += "; ";
        s += classes_[i].str() + ": " + values_[i].str();
    }
    return s;
}

ClassFunction kclass(const WeightedSheaf& f) {
    int n = f.group()->n();
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (f.group()->order() != fact)
        throw std::invalid_argument("kclass needs a sheaf over the full symmetric group");
    ClassFunction c(n);
    for (size_t i = 0; i < c.classes().size(); ++i) c.at(i) = RatFun(f.trace(permutation_of_type(c.classes()[i])));
    return c;
}

KClassSeries::KClassSeries(int N) : order(N) {
    for (int n = 0; n <= N; ++n) entries.emplace_back(n);
}

QSeries KClassSeries::invariant_series(const RatFun& c0) const {
    QSeries s(order);
    s[0] = c0;
    for (int n = 1; n <= order; ++n) s[n] = entries[static_cast<size_t>(n)].invariant_part();
    return s;
}

}  // namespace pleth
