#include "torq/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "torq/env.hpp"
#include "torq/errors.hpp"

namespace torq {

long WeightSystem::total_multiplicity() const {
  long t = 0;
  for (const auto& s : slots) t += s.multiplicity;
  return t;
}

RatVec WeightSystem::weight(int i) const { return to_rat_vec(slots[i].mu); }

void WeightSystem::check() const {
  if (rank < 1) throw std::invalid_argument("weight system: rank must be >= 1");
  if (slots.empty())
    throw std::invalid_argument("weight system: at least one weight required");
  if (static_cast<int>(nu.size()) != rank)
    throw std::invalid_argument("weight system: polarization has wrong rank");
  for (const auto& s : slots) {
    if (static_cast<int>(s.mu.size()) != rank)
      throw std::invalid_argument("weight system: weight vector has wrong rank");
    if (s.multiplicity < 1)
      throw std::invalid_argument("weight system: multiplicity must be >= 1");
  }
}

Support full_support(const WeightSystem& ws) {
  Support s(ws.count());
  for (int i = 0; i < ws.count(); ++i) s[i] = i;
  return s;
}

bool support_subset(const Support& a, const Support& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string support_to_string(const Support& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ", ";
    os << s[i] + 1;
  }
  os << "}";
  return os.str();
}

std::vector<RatVec> weights_on(const WeightSystem& ws, const Support& s) {
  std::vector<RatVec> out;
  out.reserve(s.size());
  for (int i : s) out.push_back(ws.weight(i));
  return out;
}

IntMat weight_matrix(const WeightSystem& ws, const Support& s) {
  IntMat m(static_cast<int>(s.size()), ws.rank);
  for (size_t i = 0; i < s.size(); ++i)
    for (int j = 0; j < ws.rank; ++j) m.at(static_cast<int>(i), j) = ws.slots[s[i]].mu[j];
  return m;
}

int support_rank(const WeightSystem& ws, const Support& s) {
  return rank(weight_matrix(ws, s));
}

long support_multiplicity(const WeightSystem& ws, const Support& s) {
  long t = 0;
  for (int i : s) t += ws.slots[i].multiplicity;
  return t;
}

Support support_from_mask(unsigned long mask, int k) {
  Support s;
  for (int i = 0; i < k; ++i)
    if (mask & (1UL << i)) s.push_back(i);
  return s;
}

std::vector<Support> all_supports(const WeightSystem& ws) {
  int k = ws.count();
  if (k >= 63 || (1L << k) > enum_budget())
    throw BudgetError("support enumeration over " + std::to_string(k) +
                      " weights exceeds TORQ_BUDGET");
  std::vector<Support> out;
  out.reserve(1UL << k);
  for (unsigned long mask = 0; mask < (1UL << k); ++mask)
    out.push_back(support_from_mask(mask, k));
  std::sort(out.begin(), out.end(), [](const Support& a, const Support& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace torq
