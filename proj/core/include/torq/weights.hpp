#pragma once

// A torus acting linearly on a vector space, recorded as the list of weight
// characters with multiplicities together with a rational polarization.

#include <string>
#include <vector>

#include "torq/rational.hpp"
#include "torq/smith.hpp"

namespace torq {

struct WeightSlot {
  IntVec mu;              // length = rank
  long multiplicity = 1;  // >= 1
  std::string label;      // optional
};

struct WeightSystem {
  int rank = 0;
  std::vector<WeightSlot> slots;  // at least one
  RatVec nu;                      // length = rank

  int count() const { return static_cast<int>(slots.size()); }
  long total_multiplicity() const;
  RatVec weight(int i) const;  // slot i as a rational vector

  // Throws std::invalid_argument if the basic shape invariants fail.
  void check() const;
};

// A set of coordinate directions, stored as strictly increasing 0-based slot
// indices.
using Support = std::vector<int>;

Support full_support(const WeightSystem& ws);
bool support_subset(const Support& a, const Support& b);
std::string support_to_string(const Support& s);  // 1-based "{1, 2, 4}"

std::vector<RatVec> weights_on(const WeightSystem& ws, const Support& s);
IntMat weight_matrix(const WeightSystem& ws, const Support& s);  // |s| x rank
int support_rank(const WeightSystem& ws, const Support& s);
long support_multiplicity(const WeightSystem& ws, const Support& s);

// All 2^k supports, ordered by (size, lex). Throws BudgetError when 2^k
// exceeds the work budget.
std::vector<Support> all_supports(const WeightSystem& ws);

Support support_from_mask(unsigned long mask, int k);

}  // namespace torq
