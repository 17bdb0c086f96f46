#include "torq/quotient.hpp"

#include <algorithm>

#include "torq/cone.hpp"
#include "torq/env.hpp"
#include "torq/errors.hpp"
#include "torq/parallel.hpp"

namespace torq {

bool is_ss_support(const WeightSystem& ws, const Support& s) {
  return cone_member(weights_on(ws, s), ws.nu).member;
}

namespace {

// Semistability flag for every bitmask 0..2^k-1, computed in parallel.
std::vector<char> semistable_table(const WeightSystem& ws) {
  int k = ws.count();
  if (k >= 63 || (1L << k) > enum_budget())
    throw BudgetError("support scan over " + std::to_string(k) +
                      " weights exceeds TORQ_BUDGET");
  long total = 1L << k;
  std::vector<char> ss(total, 0);
  parallel_for(total, [&](long mask) {
    ss[mask] =
        is_ss_support(ws, support_from_mask(static_cast<unsigned long>(mask), k))
            ? 1
            : 0;
  });
  return ss;
}

void sort_supports(std::vector<Support>& v) {
  std::sort(v.begin(), v.end(), [](const Support& a, const Support& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

void combinations(int k, int size, const std::function<void(const Support&)>& fn) {
  Support cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == size) {
      fn(cur);
      return;
    }
    for (int i = start; i < k; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Support> max_unstable_supports(const WeightSystem& ws) {
  int k = ws.count();
  std::vector<char> ss = semistable_table(ws);
  std::vector<Support> out;
  // Unstable supports are downward closed, so maximality is a local check:
  // every one-index extension must be semistable.
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    if (ss[mask]) continue;
    bool maximal = true;
    for (int i = 0; i < k && maximal; ++i)
      if (!(mask & (1UL << i)) && !ss[mask | (1UL << i)]) maximal = false;
    if (maximal) out.push_back(support_from_mask(mask, k));
  }
  sort_supports(out);
  return out;
}

bool stable_eq_ss(const WeightSystem& ws) {
  // By Caratheodory it is enough to look at cones spanned by fewer than
  // rank weights: any containment in a low-rank cone reduces to one of
  // those.
  bool on_wall = false;
  for (int size = 0; size < ws.rank && !on_wall; ++size)
    combinations(ws.count(), size, [&](const Support& s) {
      if (on_wall) return;
      if (cone_member(weights_on(ws, s), ws.nu).member) on_wall = true;
    });
  return !on_wall;
}

bool is_proper(const WeightSystem& ws) {
  std::vector<RatVec> vs;
  for (int i = 0; i < ws.count(); ++i) vs.push_back(ws.weight(i));
  return open_halfspace_witness(vs, ws.rank).has_value();
}

std::vector<Support> chamber_signature(const WeightSystem& ws) {
  if (!stable_eq_ss(ws))
    throw WallError("polarization " + to_string(ws.nu) +
                    " lies on a wall; the chamber is not defined");
  int k = ws.count();
  std::vector<char> ss = semistable_table(ws);
  std::vector<Support> out;
  for (unsigned long mask = 0; mask < (1UL << k); ++mask)
    if (ss[mask]) out.push_back(support_from_mask(mask, k));
  sort_supports(out);
  return out;
}

QuotientReport quotient_report(const WeightSystem& ws) {
  ws.check();
  QuotientReport rep;
  rep.nonempty = is_ss_support(ws, full_support(ws));
  rep.proper = is_proper(ws);
  rep.stable_eq_ss = stable_eq_ss(ws);
  if (rep.nonempty && rep.stable_eq_ss)
    rep.dimension = ws.total_multiplicity() - ws.rank;

  combinations(ws.count(), ws.rank, [&](const Support& s) {
    IntMat m = weight_matrix(ws, s);
    Int d = det(m);
    if (d == 0) return;
    if (!is_ss_support(ws, s)) return;
    FixedPoint fp;
    fp.support = s;
    fp.isotropy = abs(d);
    fp.count = 1;
    for (int i : s) fp.count *= ws.slots[i].multiplicity;
    rep.fixed_points.push_back(std::move(fp));
  });
  for (const auto& fp : rep.fixed_points) rep.fixed_point_count += fp.count;

  if (ws.rank == 1) {
    bool positive = ws.nu[0] > 0;
    for (const auto& slot : ws.slots)
      if (slot.mu[0] <= 0) positive = false;
    if (positive) {
      std::vector<Int> wp;
      for (const auto& slot : ws.slots)
        for (long c = 0; c < slot.multiplicity; ++c) wp.push_back(slot.mu[0]);
      rep.weighted_projective = std::move(wp);
    }
  }
  return rep;
}

}  // namespace torq
