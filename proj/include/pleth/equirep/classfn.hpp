#pragma once

#include <string>
#include <vector>

#include "pleth/coeffring/qseries.hpp"
#include "pleth/combinat/partition.hpp"
#include "pleth/equirep/sheaf.hpp"

namespace pleth {

// Function on conjugacy classes of S_n with values in Q(t), indexed by cycle
// type in the order of enumerate_int_partitions(n).
class ClassFunction {
public:
    ClassFunction() : ClassFunction(0) {}
    explicit ClassFunction(int n);

    int n() const { return n_; }
    const std::vector<IntPartition>& classes() const { return classes_; }
    const RatFun& operator[](const IntPartition& lambda) const;
    RatFun& operator[](const IntPartition& lambda);
    const RatFun& at(size_t i) const { return values_[i]; }
    RatFun& at(size_t i) { return values_[i]; }
    // Value at the class of a given permutation.
    const RatFun& at(const Permutation& s) const { return (*this)[s.cycle_type()]; }

    ClassFunction& operator+=(const ClassFunction& o);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    friend bool operator==(const ClassFunction& a, const ClassFunction& b);

    // Average over S_n, i.e. the trace of the invariant part.
    RatFun invariant_part() const;
    std::string str() const;

private:
    int n_;
    std::vector<IntPartition> classes_;
    std::vector<RatFun> values_;
};

// Character of a sheaf over S_n, as a class function.
ClassFunction kclass(const WeightedSheaf& f);

// Entries 1..N; entry n is a class function on S_n. Entry 0 is unused.
struct KClassSeries {
    int order = 0;
    std::vector<ClassFunction> entries;

    explicit KClassSeries(int N = 0);
    ClassFunction& operator[](int n) { return entries.at(static_cast<size_t>(n)); }
    const ClassFunction& operator[](int n) const { return entries.at(static_cast<size_t>(n)); }
    // Series of invariant parts, constant term `c0`.
    QSeries invariant_series(const RatFun& c0 = RatFun()) const;
};

}  // namespace pleth
