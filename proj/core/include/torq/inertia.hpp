#pragma once

// Twisted sectors of a locally free torus quotient. A finite-order torus
// element is stored as a rational vector mod the integer lattice; it acts on
// the i-th weight space through the fractional part of <mu_i, q>, and its
// sector is cut out by the coordinates it fixes.

#include <vector>

#include "torq/quotient.hpp"
#include "torq/weights.hpp"

namespace torq {

struct TorsionElement {
  RatVec representative;  // entries in [0, 1)
  Int order;              // minimal n >= 1 with n * representative integral

  static TorsionElement from(const RatVec& q);  // reduces mod Z^r
  bool is_identity() const { return order == 1; }
  TorsionElement inverse() const;
};

bool operator==(const TorsionElement& a, const TorsionElement& b);
bool operator<(const TorsionElement& a, const TorsionElement& b);  // (order, lex)

struct Sector {
  TorsionElement element;
  Support support;      // { i : <mu_i, q> integral }
  long dimension = 0;   // multiplicity of the support minus the rank
  Int element_order;    // rigidification bookkeeping
  long divisor_count = 0;  // support multiplicity
};

// The coordinates fixed by g.
Support sector_support(const WeightSystem& ws, const TorsionElement& g);

// All torsion elements whose fixed subspace can meet the semistable locus:
// the union of the finite kernels attached to the full-rank semistable
// supports of size rank. Includes the identity whenever the quotient is
// nonempty. Requires stable_eq_ss (throws InfiniteInertiaError otherwise);
// throws GroupTooLargeError past TORQ_ORDER_CAP.
std::vector<TorsionElement> torsion_candidates(const WeightSystem& ws);

// One sector per candidate with a semistable fixed support, sorted by
// (order, representative).
std::vector<Sector> inertia_sectors(const WeightSystem& ws);

}  // namespace torq
