#include "pleth/combinat/axioms.hpp"

#include <stdexcept>
#include <string>

#include "pleth/combinat/partition.hpp"

namespace pleth {

namespace {

std::string show(const PartitionIndex& ix, int a) { return ix.at(a).str(); }

void check_a1_a2(const PartitionIndex& ix, Report& rep) {
    int c = ix.count();
    auto perms = ix.n() <= 5 ? all_permutations(ix.n()) : sn_generators(ix.n());
    for (const auto& s : perms) {
        auto act = ix.action_table(s);
        for (int a = 0; a < c; ++a)
            for (int b = 0; b < c; ++b) {
                if (ix.refines(a, b) != ix.refines(act[a], act[b]))
                    rep.fail("A1 sigma=" + s.str() + " " + show(ix, a) + " <= " + show(ix, b));
                ++rep.cases;
            }
        for (int al = 0; al < c; ++al)
            for (int i = 0; i < c; ++i)
                for (int j = 0; j < c; ++j) {
                    bool lhs = ix.sim(i, j, al);
                    bool rhs = ix.sim(act[i], act[j], act[al]);
                    if (lhs != rhs)
                        rep.fail("A2 sigma=" + s.str() + " alpha=" + show(ix, al) + " i=" + show(ix, i) +
                                 " j=" + show(ix, j));
                    ++rep.cases;
                }
    }
}

void check_a3(const PartitionIndex& ix, Report& rep) {
    int c = ix.count();
    for (int al = 0; al < c; ++al)
        for (int be = 0; be < c; ++be) {
            if (!ix.refines(be, al)) continue;
            for (int i = 0; i < c; ++i)
                for (int j = 0; j < c; ++j) {
                    ++rep.cases;
                    if (ix.sim(i, j, al) && !ix.sim(i, j, be))
                        rep.fail("A3 alpha=" + show(ix, al) + " beta=" + show(ix, be) + " i=" + show(ix, i) +
                                 " j=" + show(ix, j));
                }
        }
}

void check_a4(const PartitionIndex& ix, Report& rep) {
    int c = ix.count();
    for (int j = 0; j < c; ++j)
        for (int i = 0; i < c; ++i) {
            if (!ix.refines(i, j)) continue;
            for (int k = 0; k < c; ++k) {
                if (!ix.refines(j, k)) continue;
                for (int al = 0; al < c; ++al) {
                    ++rep.cases;
                    bool lhs = ix.sim(i, k, al);
                    bool rhs = ix.sim(i, j, al) && ix.sim(j, k, al);
                    if (lhs != rhs)
                        rep.fail("A4 i=" + show(ix, i) + " j=" + show(ix, j) + " k=" + show(ix, k) +
                                 " alpha=" + show(ix, al));
                }
            }
        }
}

// Given i <= j, k <= j, i ~_beta j and k ~_alpha j, find k' <= i, k' <= k with
// k' ~_beta k and k' ~_alpha i. The alpha and beta conditions decouple, so for
// fixed (i, j, k) we collect the admissible alphas and betas first.
void check_a5(const PartitionIndex& ix, Report& rep) {
    int c = ix.count();
    std::vector<int> alphas, betas;
    for (int j = 0; j < c; ++j)
        for (int i = 0; i < c; ++i) {
            if (!ix.refines(i, j)) continue;
            for (int k = 0; k < c; ++k) {
                if (!ix.refines(k, j)) continue;
                alphas.clear();
                betas.clear();
                for (int x = 0; x < c; ++x) {
                    if (ix.sim(k, j, x)) alphas.push_back(x);
                    if (ix.sim(i, j, x)) betas.push_back(x);
                }
                int kp = ix.meet(i, k);
                for (int al : alphas)
                    for (int be : betas) {
                        ++rep.cases;
                        if (ix.sim(kp, k, be) && ix.sim(kp, i, al)) continue;
                        bool found = false;
                        for (int w = 0; w < c && !found; ++w)
                            found = ix.refines(w, i) && ix.refines(w, k) && ix.sim(w, k, be) && ix.sim(w, i, al);
                        if (!found)
                            rep.fail("A5 i=" + show(ix, i) + " j=" + show(ix, j) + " k=" + show(ix, k) +
                                     " alpha=" + show(ix, al) + " beta=" + show(ix, be));
                        else
                            rep.info["A5_meet_witness_failed"] = "yes";
                    }
            }
        }
}

}  // namespace

Report check_axioms(int n) {
    if (n < 1 || n > 6) throw std::out_of_range("check_axioms: n must be in 1..6");
    PartitionIndex ix(n);
    Report rep("axioms");
    Report a12("A1A2"), a3("A3"), a4("A4"), a5("A5");
    check_a1_a2(ix, a12);
    check_a3(ix, a3);
    check_a4(ix, a4);
    check_a5(ix, a5);
    for (auto* r : {&a12, &a3, &a4, &a5}) {
        rep.info[r->check + "_cases"] = std::to_string(r->cases);
        rep.absorb(*r);
    }
    if (a5.info.count("A5_meet_witness_failed")) rep.info["A5_meet_witness_failed"] = "yes";
    return rep;
}

}  // namespace pleth
