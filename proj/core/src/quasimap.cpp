#include "torq/quasimap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "torq/errors.hpp"

namespace torq {

WeightSystem quasimap_problem(const WeightSystem& ws, const DegreeVector& d) {
  ws.check();
  if (static_cast<int>(d.size()) != ws.rank)
    throw DimensionMismatchError("quasimap_problem: degree has wrong rank");
  for (const Rat& x : d)
    if (!is_integer(x))
      throw std::invalid_argument(
          "quasimap_problem: integral degree required, got " + to_string(d));

  WeightSystem out;
  out.rank = ws.rank;
  out.nu = ws.nu;
  for (const auto& slot : ws.slots) {
    Rat pairing = dot(slot.mu, d);
    Int factor = pairing.get_num() + 1;  // integral pairing
    if (factor <= 0) continue;
    WeightSlot s = slot;
    s.multiplicity = slot.multiplicity * factor.get_si();
    out.slots.push_back(std::move(s));
  }
  if (out.slots.empty())
    throw std::invalid_argument(
        "quasimap_problem: every section multiplicity vanished");
  return out;
}

QuotientReport quasimap_report(const WeightSystem& ws, const DegreeVector& d) {
  return quotient_report(quasimap_problem(ws, d));
}

std::vector<std::pair<IntVec, long>> merged_weights(const WeightSystem& ws) {
  std::map<IntVec, long> acc;
  for (const auto& slot : ws.slots) acc[slot.mu] += slot.multiplicity;
  return {acc.begin(), acc.end()};
}

AffineReport affine_report(const WeightSystem& ws, const DegreeVector& d) {
  ws.check();
  if (static_cast<int>(d.size()) != ws.rank)
    throw DimensionMismatchError("affine_report: degree has wrong rank");
  if (!stable_eq_ss(ws))
    throw WallError("affine_report requires a polarization off the walls");

  AffineReport rep;
  rep.sector = TorsionElement::from(d);
  rep.monomial_counts.resize(ws.count(), 0);
  for (int j = 0; j < ws.count(); ++j) {
    Rat pairing = dot(ws.slots[j].mu, d);
    if (pairing >= 0) {
      rep.monomial_counts[j] = Int(floor_rat(pairing) + 1).get_si();
      if (is_integer(pairing)) rep.leading_support.push_back(j);
    }
  }
  rep.valid = is_ss_support(ws, rep.leading_support);
  if (!rep.valid) return rep;

  long dim = -ws.rank;
  for (int j = 0; j < ws.count(); ++j)
    dim += ws.slots[j].multiplicity * rep.monomial_counts[j];
  rep.dimension = dim;

  // Generic stabilizer: the finite kernel attached to the leading support.
  SnfDecomposition s = snf(weight_matrix(ws, rep.leading_support));
  Int order = 1;
  for (int i = 0; i < ws.rank; ++i) {
    if (i >= static_cast<int>(s.factors.size()) || s.factors[i] == 0)
      throw WallError("affine_report: leading support is rank-deficient");
    order *= s.factors[i];
  }
  rep.stabilizer_order = order;
  return rep;
}

std::vector<Rat> effective_affine_degrees(const WeightSystem& ws,
                                          const Rat& bound) {
  ws.check();
  if (ws.rank != 1)
    throw std::invalid_argument(
        "effective_affine_degrees: rank-1 weight systems only");
  if (bound < 0)
    throw std::invalid_argument("effective_affine_degrees: bound must be >= 0");

  Int denom = 1;
  for (const auto& slot : ws.slots) {
    Int w = abs(slot.mu[0]);
    if (w != 0) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), w.get_mpz_t());
  }
  Int steps = floor_rat(bound * Rat(denom));

  std::vector<Rat> out;
  for (Int t = 0; t <= steps; ++t) {
    Rat d(t, denom);
    d.canonicalize();
    if (affine_report(ws, {d}).valid) out.push_back(d);
  }
  return out;
}

}  // namespace torq
