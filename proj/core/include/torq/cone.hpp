#pragma once

// Membership in finitely generated rational cones, with a witness either
// way: nonnegative combination coefficients on membership, a separating
// Farkas functional otherwise. Every answer can be re-verified by
// substitution; the verification is done here before returning.

#include <optional>
#include <vector>

#include "torq/rational.hpp"

namespace torq {

struct ConeDecision {
  bool member = false;
  // member: nonnegative c with sum_i c_i * generators[i] == target.
  std::optional<RatVec> coefficients;
  // not member: y with <generators[i], y> <= 0 for all i and <target, y> > 0.
  std::optional<RatVec> certificate;
};

// target in { sum c_i g_i : c_i >= 0 }? All vectors must share the ambient
// rank; throws DimensionMismatchError otherwise. Boundary points count as
// members.
ConeDecision cone_member(const std::vector<RatVec>& generators,
                         const RatVec& target);

// target in the rational linear span of the generators?
bool span_member(const std::vector<RatVec>& generators, const RatVec& target);

// A vector eta with <v, eta> > 0 for every v, or nullopt if the vectors are
// not contained in any open half-space. The empty list is vacuously inside
// one (the zero vector is returned as witness).
std::optional<RatVec> open_halfspace_witness(const std::vector<RatVec>& vectors,
                                             int rank);

}  // namespace torq
