#pragma once

// Semistability combinatorics of a torus quotient: which coordinate
// subspaces meet the semistable locus, the chamber the polarization sits
// in, properness, and the torus-fixed points of the quotient.

#include <optional>
#include <vector>

#include "torq/weights.hpp"

namespace torq {

// A point is semistable iff its set of nonvanishing coordinates is a
// semistable support, i.e. the polarization lies in the nonnegative cone of
// the weights indexed by the support.
bool is_ss_support(const WeightSystem& ws, const Support& s);

// Maximal unstable supports under inclusion. They determine the unstable
// locus as a union of coordinate subspaces. The empty support shows up
// exactly when the origin is unstable and every larger support is
// semistable.
std::vector<Support> max_unstable_supports(const WeightSystem& ws);

// True iff the polarization lies in no cone spanned by weights of rank
// less than the torus rank (equivalently, every semistable point has finite
// stabilizer).
bool stable_eq_ss(const WeightSystem& ws);

// True iff the weights lie in an open half-space.
bool is_proper(const WeightSystem& ws);

// The full list of semistable supports, ordered by (size, lex). Two
// polarizations lie in the same chamber iff their signatures agree.
// Throws WallError when the polarization is on a wall.
std::vector<Support> chamber_signature(const WeightSystem& ws);

struct FixedPoint {
  Support support;  // size = rank, weight submatrix of full rank
  Int isotropy;     // |det| of the submatrix = product of its invariant factors
  long count;       // coordinate choices realizing it (product of multiplicities)
};

struct QuotientReport {
  bool nonempty = false;
  // total multiplicity - rank; absent when empty or not locally free
  std::optional<long> dimension;
  bool proper = false;
  bool stable_eq_ss = false;
  std::vector<FixedPoint> fixed_points;
  long fixed_point_count = 0;
  // r = 1, all weights positive, nu > 0: the multiset of weights
  std::optional<std::vector<Int>> weighted_projective;
};

QuotientReport quotient_report(const WeightSystem& ws);

}  // namespace torq
