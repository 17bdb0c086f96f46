#pragma once

// Section spaces of gauged maps. For an integral class d over a genus-zero
// projective domain, the sections form a bigger representation of the same
// torus whose quotient is analyzed with the quotient module. Over the
// affine line the class may be fractional; the report records the monomial
// count per weight, the leading support, the generic stabilizer and the
// evaluation sector at infinity.

#include <optional>
#include <vector>

#include "torq/inertia.hpp"
#include "torq/quotient.hpp"
#include "torq/weights.hpp"

namespace torq {

using DegreeVector = RatVec;

// Same rank and polarization; weight j keeps its vector and gets
// multiplicity m_j * max(0, <d, mu_j> + 1); weights with factor 0 are
// dropped. Requires integral d.
WeightSystem quasimap_problem(const WeightSystem& ws, const DegreeVector& d);

QuotientReport quasimap_report(const WeightSystem& ws, const DegreeVector& d);

// Multiset view: distinct weight vectors with total multiplicities, ordered
// lexicographically by weight.
std::vector<std::pair<IntVec, long>> merged_weights(const WeightSystem& ws);

struct AffineReport {
  bool valid = false;
  std::vector<long> monomial_counts;  // per slot: #{e in Z : 0 <= e <= <d,mu_j>}
  Support leading_support;            // J(d) = { j : <d,mu_j> nonneg integer }
  TorsionElement sector;              // d mod Z^r, the evaluation at infinity
  // Present when valid:
  std::optional<long> dimension;
  std::optional<Int> stabilizer_order;
};

// Requires stable_eq_ss (throws WallError). The report is marked invalid
// when the leading support is unstable; the CLI turns that into
// InvalidDegreeError.
AffineReport affine_report(const WeightSystem& ws, const DegreeVector& d);

// All effective classes 0 <= d <= bound for a rank-1 torus, in increasing
// order. Denominators divide the lcm of the nonzero weight entries.
std::vector<Rat> effective_affine_degrees(const WeightSystem& ws,
                                          const Rat& bound);

}  // namespace torq
