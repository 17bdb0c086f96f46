#pragma once

// Exact linear programs in standard form,
//
//     min c.x   subject to   A x = b,  x >= 0,
//
// solved by a dense two-phase tableau simplex over the rationals with
// Bland's rule. Sizes here are tiny (tens of rows), so the dense tableau is
// the right tool; there is no floating point and no tolerance anywhere.

#include <vector>

#include "torq/rational.hpp"

namespace torq {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RatVec x;        // optimal: a primal solution
  Rat objective;   // optimal: c.x
  // infeasible: a Farkas certificate y with y.A_j <= 0 for every column j
  // and y.b > 0.
  RatVec farkas;
};

// rows: m rows of length n; b: length m; c: length n.
LpResult solve_lp(const std::vector<RatVec>& rows, const RatVec& b,
                  const RatVec& c);

}  // namespace torq
