#pragma once

// Shared fixtures, random generators and independent oracles for the test
// suites. Oracles here stay deliberately naive: substitution checks,
// exhaustive scans and brute-force generate-and-filter, never the code
// paths they are checking.

#include <random>
#include <vector>

#include "torq/cone.hpp"
#include "torq/quotient.hpp"
#include "torq/strata.hpp"
#include "torq/weights.hpp"

namespace testkit {

using namespace torq;

// --- fixtures ---------------------------------------------------------------

// (C*)^2 on C^4 with weights (1,0),(1,0),(1,1),(0,1).
inline WeightSystem c4(const Rat& nu1, const Rat& nu2) {
  WeightSystem ws;
  ws.rank = 2;
  ws.slots = {{{1, 0}}, {{1, 0}}, {{1, 1}}, {{0, 1}}};
  ws.nu = {nu1, nu2};
  return ws;
}

// C* on C_2 + C_3 (the weighted projective line).
inline WeightSystem p23() {
  WeightSystem ws;
  ws.rank = 1;
  ws.slots = {{{2}}, {{3}}};
  ws.nu = {Rat(1)};
  return ws;
}

inline WeightSystem weighted_line(const std::vector<long>& weights) {
  WeightSystem ws;
  ws.rank = 1;
  for (long w : weights) ws.slots.push_back({{Int(w)}});
  ws.nu = {Rat(1)};
  return ws;
}

// --- random instances -------------------------------------------------------

inline Rat random_rat(std::mt19937& rng, int lo = -4, int hi = 4,
                      int max_den = 3) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline RatVec random_rat_vec(std::mt19937& rng, int n, int lo = -4, int hi = 4,
                             int max_den = 3) {
  RatVec v;
  for (int i = 0; i < n; ++i) v.push_back(random_rat(rng, lo, hi, max_den));
  return v;
}

inline WeightSystem random_system(std::mt19937& rng, int max_rank = 3,
                                  int max_k = 6, int entry_bound = 2) {
  std::uniform_int_distribution<int> rd(1, max_rank);
  WeightSystem ws;
  ws.rank = rd(rng);
  std::uniform_int_distribution<int> kd(1, max_k);
  std::uniform_int_distribution<int> entry(-entry_bound, entry_bound);
  int k = kd(rng);
  for (int i = 0; i < k; ++i) {
    WeightSlot s;
    for (int j = 0; j < ws.rank; ++j) s.mu.push_back(entry(rng));
    ws.slots.push_back(std::move(s));
  }
  for (int j = 0; j < ws.rank; ++j) ws.nu.push_back(Rat(entry(rng)));
  return ws;
}

// Rejection-sampled system with the polarization off every wall.
inline WeightSystem random_chamber_system(std::mt19937& rng, int max_rank = 3,
                                          int max_k = 6) {
  while (true) {
    WeightSystem ws = random_system(rng, max_rank, max_k);
    if (stable_eq_ss(ws)) return ws;
  }
}

// --- oracles ----------------------------------------------------------------

// Witness re-substitution, the primary correctness check for cone decisions.
inline bool witness_checks(const std::vector<RatVec>& gens, const RatVec& target,
                           const ConeDecision& dec) {
  if (dec.member) {
    if (!dec.coefficients || dec.certificate) return false;
    if (dec.coefficients->size() != gens.size()) return false;
    RatVec sum(target.size(), Rat(0));
    for (size_t j = 0; j < gens.size(); ++j) {
      if ((*dec.coefficients)[j] < 0) return false;
      for (size_t i = 0; i < target.size(); ++i)
        sum[i] += (*dec.coefficients)[j] * gens[j][i];
    }
    return sum == target;
  }
  if (!dec.certificate || dec.coefficients) return false;
  for (const auto& g : gens)
    if (dot(g, *dec.certificate) > 0) return false;
  return dot(target, *dec.certificate) > 0;
}

// Exhaustive maximal-unstable computation straight from the definition.
inline std::vector<Support> brute_max_unstable(const WeightSystem& ws) {
  int k = ws.count();
  std::vector<Support> unstable;
  for (unsigned long m = 0; m < (1UL << k); ++m) {
    Support s = support_from_mask(m, k);
    if (!is_ss_support(ws, s)) unstable.push_back(s);
  }
  std::vector<Support> maximal;
  for (const auto& s : unstable) {
    bool max = true;
    for (const auto& t : unstable)
      if (s != t && support_subset(s, t)) max = false;
    if (max) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end(), [](const Support& a, const Support& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return maximal;
}

// Unordered set partitions of {1..n} counted by brute-force recursion.
inline long partition_count(int n) {
  if (n == 0) return 1;
  // B(n) = sum_k C(n-1, k) B(k)
  std::vector<long> bell(n + 1, 0);
  bell[0] = 1;
  std::vector<std::vector<long>> choose(n + 1, std::vector<long>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    choose[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
  }
  for (int m = 1; m <= n; ++m) {
    long s = 0;
    for (int k = 0; k < m; ++k) s += choose[m - 1][k] * bell[k];
    bell[m] = s;
  }
  return bell[n];
}

// Generate-and-filter oracle for type enumeration at degree zero: all
// labeled parent vectors on <= 2n vertices, all marking assignments, all
// scaling assignments, filtered by validate and deduplicated by the
// canonical encoding.
std::vector<std::string> brute_type_encodings(int n);

// Random structurally-valid (not necessarily stable) trees for stabilize
// tests: scalings follow the geometric pattern so markings can always be
// placed legally.
ColoredTree random_structural_tree(std::mt19937& rng, int max_extra = 6);

}  // namespace testkit
