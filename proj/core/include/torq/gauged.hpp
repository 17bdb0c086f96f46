#pragma once

// Abelian gauged stability. A destabilizing one-parameter subgroup for a
// support pairs nonnegatively with the weights on the support and
// negatively with the polarization; the gauged weight mixes the bundle
// class with rho times the area-weighted polarization pairing. Above a
// finite threshold in rho, gauged semistability of every support agrees
// with the plain semistability of the quotient.

#include <optional>

#include "torq/quasimap.hpp"
#include "torq/weights.hpp"

namespace torq {

struct OneParamSubgroup {
  IntVec lambda;  // primitive unless zero; lambda and -lambda are distinct
};

struct MundetProblem {
  WeightSystem ws;
  DegreeVector degree;  // bundle class
  Rat rho;              // > 0
  Rat area = 1;         // > 0
};

// A lambda with <mu_i, lambda> >= 0 for all i in the support and
// <nu, lambda> < 0; absent iff the support is semistable.
std::optional<OneParamSubgroup> destab_certificate(const WeightSystem& ws,
                                                   const Support& s);

// w = -<d, lambda> - rho * area * <nu, lambda>. The support is destabilized
// by lambda when w > 0. Throws InadmissibleError if lambda pairs negatively
// with some weight on the support.
Rat gauged_weight(const MundetProblem& mp, const Support& s,
                  const OneParamSubgroup& lambda);

// True iff no admissible lambda has positive gauged weight; equivalently,
// d + rho * area * nu lies in the cone of the support's weights.
bool is_gauged_semistable(const MundetProblem& mp, const Support& s);

// The least rho_0 such that for every rho > rho_0 and every support,
// gauged semistability agrees with plain semistability. Computed from the
// exact entry/exit values of the line d + rho * area * nu across each
// support cone. Requires stable_eq_ss; throws WallError when no finite
// threshold exists.
Rat rho_threshold(const WeightSystem& ws, const DegreeVector& d,
                  const Rat& area = Rat(1));

}  // namespace torq
