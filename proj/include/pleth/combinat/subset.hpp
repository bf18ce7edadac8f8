#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pleth {

// Subset of [n] = {1..n}. Bit i of the mask is element i (bit 0 unused), so the
// mask equals sum of 2^i over members and integer comparison of masks is the
// binary order.
class Subset {
public:
    static constexpr int kMaxN = 30;

    Subset() = default;
    Subset(int n, uint32_t mask);
    static Subset of(int n, const std::vector<int>& members);
    static Subset full(int n);

    int n() const { return n_; }
    uint32_t mask() const { return mask_; }
    bool contains(int i) const { return (mask_ >> i) & 1u; }
    int size() const;
    bool empty() const { return mask_ == 0; }
    int max_element() const;  // 0 for the empty set
    int min_element() const;  // 0 for the empty set
    std::vector<int> members() const;

    bool subset_of(const Subset& o) const { return (mask_ & ~o.mask_) == 0; }
    bool disjoint(const Subset& o) const { return (mask_ & o.mask_) == 0; }
    Subset operator&(const Subset& o) const { return {n_, mask_ & o.mask_}; }
    Subset operator|(const Subset& o) const { return {n_, mask_ | o.mask_}; }
    Subset minus(const Subset& o) const { return {n_, mask_ & ~o.mask_}; }

    friend bool operator==(const Subset& a, const Subset& b) { return a.mask_ == b.mask_ && a.n_ == b.n_; }
    // Binary order. Callers compare subsets of the same ambient set.
    friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) { return a.mask_ <=> b.mask_; }

    std::string str() const;  // "{1,3}"

private:
    int n_ = 0;
    uint32_t mask_ = 0;
};

// Checked comparison in the binary order; throws on mismatched ambient size.
std::strong_ordering binary_cmp(const Subset& a, const Subset& b);

// Order-preserving identification i_A : [|A|] -> A and its inverse.
Subset embed(const Subset& inner, const Subset& a);     // i_A(inner), inner subset of [|A|]
Subset restrict_to(const Subset& s, const Subset& a);   // i_A^{-1}(s), s subset of A

}  // namespace pleth
