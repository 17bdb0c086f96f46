#include "torq/gauged.hpp"

#include <stdexcept>

#include "torq/cone.hpp"
#include "torq/errors.hpp"
#include "torq/quotient.hpp"
#include "torq/simplex.hpp"

namespace torq {

std::optional<OneParamSubgroup> destab_certificate(const WeightSystem& ws,
                                                   const Support& s) {
  ConeDecision dec = cone_member(weights_on(ws, s), ws.nu);
  if (dec.member) return std::nullopt;
  // The Farkas functional pairs <= 0 with the weights and > 0 with nu;
  // flipping its sign gives the destabilizer orientation.
  OneParamSubgroup lam{primitive_integer(negate(*dec.certificate))};
  for (int i : s)
    if (dot(ws.slots[i].mu, to_rat_vec(lam.lambda)) < 0)
      throw std::logic_error("destab_certificate: inadmissible certificate");
  return lam;
}

Rat gauged_weight(const MundetProblem& mp, const Support& s,
                  const OneParamSubgroup& lambda) {
  RatVec lam = to_rat_vec(lambda.lambda);
  for (int i : s)
    if (dot(mp.ws.slots[i].mu, lam) < 0)
      throw InadmissibleError("lambda pairs negatively with weight " +
                              std::to_string(i + 1) + " on the support");
  return -dot(mp.degree, lam) - mp.rho * mp.area * dot(mp.ws.nu, lam);
}

bool is_gauged_semistable(const MundetProblem& mp, const Support& s) {
  if (mp.rho <= 0 || mp.area <= 0)
    throw std::invalid_argument("gauged stability needs rho > 0 and area > 0");
  // sup of -<d + rho*area*nu, lambda> over the admissibility cone is either
  // 0 or +infinity; it is 0 exactly when the shifted class lies in the dual
  // of the dual, i.e. in the cone of the support weights.
  RatVec shifted = add(mp.degree, scale(mp.rho * mp.area, mp.ws.nu));
  return cone_member(weights_on(mp.ws, s), shifted).member;
}

namespace {

// Endpoints of { rho >= 0 : d + rho*area*nu in cone(weights on s) }: the
// set is an interval since the cone is convex. Returned as (feasible,
// min, max, max_unbounded).
struct Interval {
  bool feasible = false;
  Rat lo, hi;
  bool unbounded = false;
};

Interval cone_line_interval(const WeightSystem& ws, const Support& s,
                            const DegreeVector& d, const Rat& area) {
  int r = ws.rank;
  int k = static_cast<int>(s.size());
  std::vector<RatVec> rows(r, RatVec(k + 1, Rat(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < k; ++j) rows[i][j] = Rat(ws.slots[s[j]].mu[i]);
    rows[i][k] = -area * ws.nu[i];
  }
  RatVec cmin(k + 1, Rat(0));
  cmin[k] = 1;

  Interval out;
  LpResult lo = solve_lp(rows, d, cmin);
  if (lo.status == LpStatus::infeasible) return out;
  if (lo.status != LpStatus::optimal)
    throw std::logic_error("rho interval: lower end cannot be unbounded");
  out.feasible = true;
  out.lo = lo.objective;

  RatVec cmax(k + 1, Rat(0));
  cmax[k] = -1;
  LpResult hi = solve_lp(rows, d, cmax);
  if (hi.status == LpStatus::unbounded) {
    out.unbounded = true;
  } else if (hi.status == LpStatus::optimal) {
    out.hi = -hi.objective;
  } else {
    throw std::logic_error("rho interval: feasibility flipped between solves");
  }
  return out;
}

}  // namespace

Rat rho_threshold(const WeightSystem& ws, const DegreeVector& d,
                  const Rat& area) {
  ws.check();
  if (static_cast<int>(d.size()) != ws.rank)
    throw DimensionMismatchError("rho_threshold: degree has wrong rank");
  if (area <= 0) throw std::invalid_argument("rho_threshold: area must be > 0");
  if (!stable_eq_ss(ws))
    throw WallError("rho_threshold requires a polarization off the walls");

  // For each support the gauged verdict along increasing rho is an
  // interval of membership; past the last entry/exit value the verdict is
  // constant and must match the plain one. The threshold is the sup of the
  // disagreement set.
  Rat threshold = 0;
  for (const Support& s : all_supports(ws)) {
    bool plain = is_ss_support(ws, s);
    Interval iv = cone_line_interval(ws, s, d, area);
    if (plain) {
      if (!iv.feasible || !iv.unbounded)
        throw WallError("support " + support_to_string(s) +
                        " is semistable but the gauged verdict never "
                        "stabilizes to it");
      if (iv.lo > threshold) threshold = iv.lo;  // disagreement on (0, lo)
    } else {
      if (!iv.feasible) continue;
      if (iv.unbounded)
        throw WallError("support " + support_to_string(s) +
                        " is unstable but gauged-semistable for all large rho");
      if (iv.hi > threshold) threshold = iv.hi;  // disagreement up to hi
    }
  }
  return threshold;
}

}  // namespace torq
