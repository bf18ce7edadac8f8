#include "pleth/treecx/psi.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace pleth {

std::string PsiValue::str() const {
    return "(" + psi1.str() + "," + std::to_string(psi2) + "," + std::to_string(psi3) + "," + std::to_string(psi4) +
           "," + std::to_string(psi5) + ")";
}

int psi_compare(const PsiValue& a, const PsiValue& b) {
    if (a.psi1 != b.psi1) return a.psi1 < b.psi1 ? 1 : -1;
    int x[] = {a.psi2, a.psi3, a.psi4, a.psi5};
    int y[] = {b.psi2, b.psi3, b.psi4, b.psi5};
    for (int i = 0; i < 4; ++i)
        if (x[i] != y[i]) return x[i] > y[i] ? 1 : -1;
    return 0;
}

BlockPair BlockPair::of(const SetPartition& b, bool swapped) {
    if (b.size() != 2) throw std::invalid_argument("psi needs a two-block partition, got " + b.str());
    const auto& bs = b.blocks();
    return swapped ? BlockPair{bs[1], bs[0]} : BlockPair{bs[0], bs[1]};
}

std::vector<SetPartition> two_block_partitions(int n) {
    std::vector<SetPartition> out;
    for (const auto& p : enumerate_set_partitions(n))
        if (p.size() == 2) out.push_back(p);
    return out;
}

Subset psi_node(const IndexTree& t, const BlockPair& b) {
    for (const auto& l : t.labels())
        if (!l.subset_of(b.b1) && !l.subset_of(b.b2)) return l;
    throw std::logic_error("root label lies in a block");
}

PsiValue psi(const IndexTree& t, const BlockPair& b) {
    PsiValue v;
    Subset d = psi_node(t, b);
    Subset c1 = b.b1 & d, c2 = b.b2 & d;
    v.psi1 = d;
    int below_c2 = 0;
    for (const auto& l : t.labels()) {
        if (!l.subset_of(d)) {
            ++v.psi2;
            continue;
        }
        if (l == d) continue;
        if (l.subset_of(c1) && !(l == c1)) ++v.psi3;
        if (l.subset_of(c2)) ++below_c2;
        if (l.subset_of(c2) && !(l == c2)) ++v.psi5;
    }
    v.psi4 = v.psi3 * below_c2;
    return v;
}

PsiValue psi(const IndexTree& t, const SetPartition& b) { return psi(t, BlockPair::of(b)); }

const char* match_type_name(MatchType m) {
    switch (m) {
        case MatchType::P: return "P";
        case MatchType::Q1: return "Q1";
        case MatchType::Q2: return "Q2";
        default: return "none";
    }
}

MatchType match_type(const Contraction& c, const BlockPair& b) {
    Subset d = psi_node(c.source, b);
    Subset c1 = b.b1 & d, c2 = b.b2 & d;
    if (c.kind == ContractionKind::Exceptional) {
        if (!(c.node == d)) return MatchType::None;
        auto ch = c.source.children(d);
        bool two = ch.size() == 2 && ((ch[0] == c1 && ch[1] == c2) || (ch[0] == c2 && ch[1] == c1));
        return two ? MatchType::P : MatchType::None;
    }
    if (c.node == c1) return MatchType::Q1;
    if (c.node == c2) return MatchType::Q2;
    return MatchType::None;
}

Report check_psi_monotone(int n) {
    if (n < 1 || n > 6) throw std::out_of_range("check_psi_monotone: n must be in 1..6");
    Report rep("psi_monotone");
    auto trees = enumerate_trees(n);
    for (const auto& part : two_block_partitions(n))
        for (bool swapped : {false, true}) {
            BlockPair b = BlockPair::of(part, swapped);
            for (const auto& t : trees) {
                PsiValue pt = psi(t, b);
                for (const auto& c : contractions_of(t)) {
                    PsiValue pc = psi(c.target, b);
                    rep.expect(psi_compare(pt, pc) >= 0, "B=" + part.str() + (swapped ? " swapped" : "") +
                                                             " tree=" + t.str() + " psi " + pt.str() +
                                                             " < " + pc.str() + " after contracting " + c.node.str());
                }
            }
        }
    return rep;
}

Report psi_matching(int n, const SetPartition& part, bool swapped) {
    if (n < 1 || n > 6) throw std::out_of_range("psi_matching: n must be in 1..6");
    Report rep("psi_matching");
    BlockPair b = BlockPair::of(part, swapped);
    TreeIndex ix(n);
    std::vector<int> hits(static_cast<size_t>(ix.count()), 0);
    std::map<std::string, uint64_t> types;
    std::string tag = "B=" + part.str() + (swapped ? " swapped" : "");
    for (int i = 0; i < ix.count(); ++i) {
        const IndexTree& t = ix.at(i);
        PsiValue pt = psi(t, b);
        SetPartition mt = t.leaves_partition().meet(part);
        for (const auto& c : contractions_of(t)) {
            if (psi_compare(pt, psi(c.target, b)) != 0) continue;
            ++hits[static_cast<size_t>(i)];
            ++hits[static_cast<size_t>(ix.index_of(c.target))];
            MatchType m = match_type(c, b);
            ++types[match_type_name(m)];
            std::string w = tag + " tree=" + t.str() + " node=" + c.node.str();
            rep.expect(m != MatchType::None, w + " preserving contraction of no known type");
            rep.expect(c.target.leaves_partition().meet(part) == mt, w + " meet with B changes");
        }
    }
    for (int i = 0; i < ix.count(); ++i)
        rep.expect(hits[static_cast<size_t>(i)] == 1,
                   tag + " tree=" + ix.at(i).str() + " meets " + std::to_string(hits[static_cast<size_t>(i)]) +
                       " preserving contractions");
    for (const auto& [k, v] : types) rep.info["type_" + k] = std::to_string(v);
    return rep;
}

}  // namespace pleth
