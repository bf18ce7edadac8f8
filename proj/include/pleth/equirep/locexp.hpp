#pragma once

#include <stdexcept>
#include <vector>

#include "pleth/common/report.hpp"
#include "pleth/equirep/classfn.hpp"
#include "pleth/equirep/sheaf.hpp"

namespace pleth {

// Raised when [D] vanishes, so the tensor powers of D are not units.
class UnitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Representations F_1, F_2, ... where reps[m-1] is a sheaf over S_m on a
// point. Missing or absent entries count as zero.
using RepSequence = std::vector<WeightedSheaf>;

// Matrix of sigma : F_A -> F_{sigma A} on the tensor product over the blocks of
// A (binary order): each factor is moved by the induced permutation of its
// block, then factors are put back into binary order with Koszul signs.
Matrix block_tensor_map(const RepSequence& reps, const SetPartition& a, const Permutation& s);
WeightedSpace block_tensor_fiber(const RepSequence& reps, const SetPartition& a, int nvars);

// F_lambda over S_n; the carrier is the list of set partitions of type lambda
// in canonical order.
WeightedSheaf f_lambda(const RepSequence& reps, const IntPartition& lambda, int nvars);
std::vector<SetPartition> partitions_of_type(const IntPartition& lambda);

// alpha_i = [F_i]/[D] with D a weighted space carrying the trivial action.
struct QuotientPresentation {
    int nvars = 0;
    RepSequence F;
    WeightedSpace D;

    int max_degree() const { return static_cast<int>(F.size()); }
    ClassFunction alpha(int n) const;  // tr F_n / tr D per class
    KClassSeries classes(int N) const;
};

// Trace quotient on the stabilizer of a set partition of type lambda, induced
// up to S_n.
ClassFunction alpha_lambda(const QuotientPresentation& p, const IntPartition& lambda);
KClassSeries loc_exp(const QuotientPresentation& p, int N);

struct CharacterLemmaResult {
    Report report;
    QSeries lhs;
    QSeries rhs;
};
CharacterLemmaResult verify_character_lemma(const QuotientPresentation& p, int N);

}  // namespace pleth
