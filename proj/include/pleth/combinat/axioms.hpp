#pragma once

#include "pleth/common/report.hpp"

namespace pleth {

// Exhaustive check of (A1)-(A5) for the set-partition model of [n]: the
// index posets are set partitions ordered by refinement, S_n acts by relabeling
// and b ~_alpha c iff meet(b, alpha) = meet(c, alpha).
// (A2) runs over all of S_n for n <= 5 and over generators beyond that.
Report check_axioms(int n);

}  // namespace pleth
