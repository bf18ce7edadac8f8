#include "pleth/combinat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pleth/combinat/partition.hpp"

namespace pleth {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
        if (v < 1 || v > n() || seen[static_cast<size_t>(v)]) throw std::invalid_argument("not a permutation");
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int a, int b) {
    auto p = identity(n);
    std::swap(p.img_.at(static_cast<size_t>(a - 1)), p.img_.at(static_cast<size_t>(b - 1)));
    return p;
}

Permutation Permutation::cycle(int n, const std::vector<int>& elems) {
    auto p = identity(n);
    for (size_t k = 0; k < elems.size(); ++k)
        p.img_.at(static_cast<size_t>(elems[k] - 1)) = elems[(k + 1) % elems.size()];
    return Permutation(p.img_);
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (n() != o.n()) throw std::invalid_argument("composing permutations of different size");
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 1; i <= n(); ++i) r.img_[static_cast<size_t>(i - 1)] = (*this)(o(i));
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 1; i <= n(); ++i) r.img_[static_cast<size_t>((*this)(i) - 1)] = i;
    return r;
}

Subset Permutation::apply(const Subset& s) const {
    if (s.n() != n()) throw std::invalid_argument("permutation and subset sizes differ");
    uint32_t m = 0;
    for (int i = 1; i <= n(); ++i)
        if (s.contains(i)) m |= 1u << (*this)(i);
    return {n(), m};
}

int Permutation::sign() const {
    int parity = 0;
    std::vector<bool> seen(img_.size() + 1, false);
    for (int i = 1; i <= n(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = (*this)(j)) {
            seen[static_cast<size_t>(j)] = true;
            ++len;
        }
        parity += len - 1;
    }
    return parity % 2 ? -1 : 1;
}

IntPartition Permutation::cycle_type() const {
    std::vector<int> parts;
    std::vector<bool> seen(img_.size() + 1, false);
    for (int i = 1; i <= n(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = (*this)(j)) {
            seen[static_cast<size_t>(j)] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return IntPartition(parts);
}

uint64_t Permutation::code() const {
    uint64_t c = 0;
    for (int v : img_) c = (c << 4) | static_cast<uint64_t>(v - 1);
    return c;
}

std::string Permutation::str() const {
    std::string s = "[";
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(img_[i]);
    }
    return s + "]";
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Permutation> sn_generators(int n) {
    if (n < 2) return {Permutation::identity(n)};
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    return {Permutation::transposition(n, 1, 2), Permutation::cycle(n, all)};
}

Permutation induced_on_block(const Permutation& s, const Subset& a) {
    auto src = a.members();
    auto dst = s.apply(a).members();
    std::vector<int> img;
    for (int x : src) img.push_back(static_cast<int>(std::find(dst.begin(), dst.end(), s(x)) - dst.begin()) + 1);
    return Permutation(std::move(img));
}

}  // namespace pleth
