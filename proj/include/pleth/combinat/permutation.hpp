#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pleth/combinat/subset.hpp"

namespace pleth {

class IntPartition;

// Bijection of [n]. Composition is (s * t)(i) = s(t(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // images[i-1] = sigma(i)
    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);
    static Permutation cycle(int n, const std::vector<int>& elems);  // a1 -> a2 -> ... -> a1

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& images() const { return img_; }
    bool is_identity() const;

    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    Subset apply(const Subset& s) const;
    int sign() const;
    IntPartition cycle_type() const;
    uint64_t code() const;  // injective for n <= 16

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string str() const;  // image array "[2,1,3]"

private:
    std::vector<int> img_;
};

// All permutations of [n] in lexicographic order of image arrays.
std::vector<Permutation> all_permutations(int n);
// Generators of S_n: the transposition (1 2) and the long cycle (1 2 ... n).
std::vector<Permutation> sn_generators(int n);
// tau_A = i_{sA}^{-1} o s o i_A as a permutation of [|A|].
Permutation induced_on_block(const Permutation& s, const Subset& a);

}  // namespace pleth
