#include "pleth/combinat/subset.hpp"

#include <bit>
#include <stdexcept>

namespace pleth {

Subset::Subset(int n, uint32_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > kMaxN) throw std::out_of_range("subset ambient size out of range");
    uint32_t allowed = (n == 0) ? 0u : (((1u << n) - 1u) << 1);
    if (mask & ~allowed) throw std::out_of_range("subset member outside [n]");
}

Subset Subset::of(int n, const std::vector<int>& members) {
    uint32_t m = 0;
    for (int i : members) {
        if (i < 1 || i > n) throw std::out_of_range("subset member outside [n]");
        m |= 1u << i;
    }
    return {n, m};
}

Subset Subset::full(int n) { return {n, n == 0 ? 0u : (((1u << n) - 1u) << 1)}; }

int Subset::size() const { return std::popcount(mask_); }

int Subset::max_element() const { return mask_ ? 31 - std::countl_zero(mask_) : 0; }

int Subset::min_element() const { return mask_ ? std::countr_zero(mask_) : 0; }

std::vector<int> Subset::members() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string Subset::str() const {
    std::string s = "{";
    bool first = true;
    for (int i : members()) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

std::strong_ordering binary_cmp(const Subset& a, const Subset& b) {
    if (a.n() != b.n()) throw std::invalid_argument("binary_cmp: mismatched ambient size");
    return a <=> b;
}

Subset embed(const Subset& inner, const Subset& a) {
    auto elems = a.members();
    uint32_t m = 0;
    for (int i : inner.members()) {
        if (i > static_cast<int>(elems.size())) throw std::out_of_range("embed: element outside [|A|]");
        m |= 1u << elems[static_cast<size_t>(i - 1)];
    }
    return {a.n(), m};
}

Subset restrict_to(const Subset& s, const Subset& a) {
    if (!s.subset_of(a)) throw std::invalid_argument("restrict_to: not a subset");
    auto elems = a.members();
    uint32_t m = 0;
    for (size_t k = 0; k < elems.size(); ++k)
        if (s.contains(elems[k])) m |= 1u << (k + 1);
    return {a.size(), m};
}

}  // namespace pleth
