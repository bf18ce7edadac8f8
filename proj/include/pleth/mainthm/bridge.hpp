#pragma once

#include "pleth/common/report.hpp"
#include "pleth/equirep/classfn.hpp"
#include "pleth/equirep/locexp.hpp"

namespace pleth {

// [G_n] as a class function on S_n for representations F_1, F_2, ... on a
// point. From trees: sum over trees fixed by sigma of
// (-1)^(k + l(T, sigma)) times the supertrace of sigma on F_{A(T)}.
ClassFunction gn_class_from_trees(const RepSequence& reps, int n, int nvars);
// From the recursion G_m = F_m + (sum over A with >= 2 blocks of G_A)[1],
// building each G_m as an honest graded representation.
ClassFunction gn_class_inductive(const RepSequence& reps, int n, int nvars);
// The graded representation G_n itself (on a point, over S_n).
WeightedSheaf gn_representation(const RepSequence& reps, int n, int nvars);

Report verify_bridge(const RepSequence& reps, int n, int nvars);

}  // namespace pleth
