#include <doctest.h>

#include <algorithm>
#include <set>

#include "pleth/coeffring/rng.hpp"
#include "pleth/combinat/axioms.hpp"
#include "pleth/combinat/partition.hpp"
#include "pleth/combinat/permutation.hpp"

using namespace pleth;

namespace {

uint64_t bell(int n) {
    // B_{m+1} = sum_k C(m, k) B_k
    std::vector<uint64_t> b{1};
    for (int m = 0; m < n; ++m) {
        uint64_t s = 0, c = 1;
        for (int k = 0; k <= m; ++k) {
            s += c * b[static_cast<size_t>(k)];
            c = c * static_cast<uint64_t>(m - k) / static_cast<uint64_t>(k + 1);
        }
        b.push_back(s);
    }
    return b[static_cast<size_t>(n)];
}

Permutation random_perm(Rng& rng, int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(img[static_cast<size_t>(i)], img[rng.below(static_cast<uint64_t>(i) + 1)]);
    return Permutation(img);
}

SetPartition random_partition(Rng& rng, int n) {
    std::vector<int> labels(static_cast<size_t>(n));
    for (auto& l : labels) l = rng.range(0, n - 1);
    return SetPartition::from_labels(labels);
}

// Meet by the definition: i, j share a block iff they do in both.
SetPartition meet_oracle(const SetPartition& a, const SetPartition& b) {
    int n = a.n();
    std::vector<int> labels(static_cast<size_t>(n), -1);
    int next = 0;
    for (int i = 1; i <= n; ++i) {
        if (labels[static_cast<size_t>(i - 1)] >= 0) continue;
        for (int j = i; j <= n; ++j)
            if (a.same_block(i, j) && b.same_block(i, j)) labels[static_cast<size_t>(j - 1)] = next;
        ++next;
    }
    return SetPartition::from_labels(labels);
}

SetPartition sp(int n, std::vector<std::vector<int>> b) { return SetPartition::from_blocks(n, b); }

}  // namespace

TEST_CASE("binary order on subsets") {
    CHECK(Subset::of(3, {1}) < Subset::of(3, {2}));
    CHECK(Subset::of(4, {2, 3}) < Subset::of(4, {1, 4}));
    CHECK(binary_cmp(Subset::of(4, {1, 4}), Subset::of(4, {1, 4})) == std::strong_ordering::equal);
    CHECK_THROWS(binary_cmp(Subset::of(3, {1}), Subset::of(4, {1})));
    for (uint32_t a = 2; a < 64; a += 2)
        for (uint32_t b = 2; b < 64; b += 2) {
            Subset x(5, a), y(5, b);
            long sx = 0, sy = 0;
            for (int i : x.members()) sx += 1L << i;
            for (int i : y.members()) sy += 1L << i;
            CHECK((binary_cmp(x, y) == std::strong_ordering::less) == (sx < sy));
        }
}

TEST_CASE("embedding of [|A|] into A") {
    Subset a = Subset::of(5, {2, 4, 5});
    CHECK(embed(Subset::of(3, {1, 3}), a) == Subset::of(5, {2, 5}));
    CHECK(restrict_to(Subset::of(5, {4, 5}), a) == Subset::of(3, {2, 3}));
}

TEST_CASE("set partition canonical form") {
    SetPartition a = sp(3, {{3}, {2, 1}});
    CHECK(a.str() == "{{1,2},{3}}");
    CHECK(a == SetPartition::from_labels({7, 7, 2}));
    CHECK_THROWS(sp(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS(sp(3, {{1}, {2}}));
    SetPartition b = sp(4, {{1, 4}, {2, 3}});
    CHECK(b.blocks()[0] == Subset::of(4, {2, 3}));
}

TEST_CASE("refinement and meet examples") {
    CHECK(refines(SetPartition::singletons(3), sp(3, {{1, 2}, {3}})));
    CHECK_FALSE(refines(sp(3, {{1, 2}, {3}}), sp(3, {{1}, {2, 3}})));
    CHECK(meet(sp(3, {{1, 2}, {3}}), sp(3, {{1}, {2, 3}})) == SetPartition::singletons(3));
    CHECK(meet(SetPartition::one_block(4), sp(4, {{1, 3}, {2, 4}})) == sp(4, {{1, 3}, {2, 4}}));
    CHECK(act_partition(Permutation::transposition(3, 1, 2), sp(3, {{1, 3}, {2}})) == sp(3, {{2, 3}, {1}}));
    CHECK(sim_alpha(sp(3, {{1, 2}, {3}}), SetPartition::singletons(3), SetPartition::singletons(3)));
    CHECK_FALSE(sim_alpha(sp(3, {{1, 2}, {3}}), SetPartition::singletons(3), SetPartition::one_block(3)));
}

TEST_CASE("set partitions are counted by the Bell numbers") {
    for (int n = 1; n <= 7; ++n) {
        auto all = enumerate_set_partitions(n);
        CHECK(all.size() == bell(n));
        std::set<uint64_t> codes;
        for (const auto& p : all) codes.insert(p.code());
        CHECK(codes.size() == all.size());
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
    CHECK(enumerate_set_partitions(3).size() == 5);
}

TEST_CASE("meet, refinement and the action agree with their definitions") {
    Rng rng(9);
    for (int it = 0; it < 400; ++it) {
        int n = rng.range(1, 6);
        SetPartition a = random_partition(rng, n), b = random_partition(rng, n);
        SetPartition m = meet(a, b);
        CHECK(m == meet_oracle(a, b));
        CHECK(refines(m, a));
        CHECK(refines(m, b));
        CHECK(meet(a, a) == a);
        CHECK(refines(a, b) == (meet(a, b) == a));
        Permutation s = random_perm(rng, n), t = random_perm(rng, n);
        CHECK(act_partition(s * t, a) == act_partition(s, act_partition(t, a)));
        CHECK(meet(act_partition(s, a), act_partition(s, b)) == act_partition(s, m));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                CHECK(a.same_block(i, j) == act_partition(s, a).same_block(s(i), s(j)));
    }
}

TEST_CASE("permutations") {
    Permutation s = Permutation::cycle(3, {1, 2, 3});
    Permutation t = Permutation::transposition(3, 1, 2);
    CHECK((s * t)(1) == s(t(1)));
    CHECK((s * t)(1) == 3);
    CHECK(s.inverse() * s == Permutation::identity(3));
    CHECK(s.sign() == 1);
    CHECK(t.sign() == -1);
    CHECK(Permutation::identity(4).cycle_type() == IntPartition({1, 1, 1, 1}));
    CHECK(t.apply(Subset::of(3, {1, 3})) == Subset::of(3, {2, 3}));
    CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("cycle type counts match direct classification") {
    for (int n = 1; n <= 6; ++n) {
        std::map<IntPartition, uint64_t> seen;
        for (const auto& s : all_permutations(n)) ++seen[s.cycle_type()];
        auto parts = enumerate_int_partitions(n);
        CHECK(parts.size() == seen.size());
        for (const auto& l : parts) {
            CHECK(count_cycle_type(l) == seen[l]);
            CHECK(permutation_of_type(l).cycle_type() == l);
        }
    }
    CHECK(count_cycle_type(IntPartition({2, 1})) == 3);
}

TEST_CASE("partition index tables") {
    PartitionIndex ix(4);
    CHECK(ix.count() == 15);
    for (int a = 0; a < ix.count(); ++a)
        for (int b = 0; b < ix.count(); ++b) {
            CHECK(ix.at(ix.meet(a, b)) == meet(ix.at(a), ix.at(b)));
            CHECK(ix.refines(a, b) == refines(ix.at(a), ix.at(b)));
        }
    CHECK(ix.at(ix.singletons()) == SetPartition::singletons(4));
    CHECK(ix.at(ix.one_block()) == SetPartition::one_block(4));
}

TEST_CASE("stratification axioms hold exhaustively for small n") {
    for (int n = 1; n <= 4; ++n) {
        Report r = check_axioms(n);
        INFO(r.witness);
        CHECK(r.pass);
        CHECK(r.cases > 0);
    }
    CHECK_THROWS(check_axioms(7));
}
