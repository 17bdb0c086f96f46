#include "torq/inertia.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "torq/env.hpp"
#include "torq/errors.hpp"
#include "torq/smith.hpp"

namespace torq {

TorsionElement TorsionElement::from(const RatVec& q) {
  TorsionElement g;
  g.representative = mod_one(q);
  g.order = lcm_denominators(g.representative);
  return g;
}

TorsionElement TorsionElement::inverse() const {
  return TorsionElement::from(negate(representative));
}

bool operator==(const TorsionElement& a, const TorsionElement& b) {
  return a.representative == b.representative;
}

bool operator<(const TorsionElement& a, const TorsionElement& b) {
  int c = cmp(a.order, b.order);
  if (c != 0) return c < 0;
  return lex_less(a.representative, b.representative);
}

Support sector_support(const WeightSystem& ws, const TorsionElement& g) {
  Support s;
  for (int i = 0; i < ws.count(); ++i)
    if (is_integer(dot(ws.slots[i].mu, g.representative))) s.push_back(i);
  return s;
}

namespace {

// Solutions q mod Z^r of A q integral, for a square full-rank A: with
// U A V = D, substitute q = V y; then y_i runs over (1/d_i) Z mod Z.
void kernel_elements(const IntMat& A, long cap,
                     const std::function<void(const RatVec&)>& emit) {
  SnfDecomposition s = snf(A);
  int r = A.cols;
  Int total = 1;
  for (int i = 0; i < r; ++i) {
    if (s.factors[i] == 0)
      throw InfiniteInertiaError("weight submatrix is rank-deficient");
    total *= s.factors[i];
  }
  if (total > cap)
    throw GroupTooLargeError("isotropy group of order " + total.get_str() +
                             " exceeds TORQ_ORDER_CAP");
  std::vector<long> counters(r, 0);
  std::vector<long> bounds(r);
  for (int i = 0; i < r; ++i) bounds[i] = s.factors[i].get_si();
  while (true) {
    RatVec y(r);
    for (int i = 0; i < r; ++i) {
      y[i] = Rat(counters[i], bounds[i]);
      y[i].canonicalize();
    }
    RatVec q(r, Rat(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) q[i] += Rat(s.right.at(i, j)) * y[j];
    emit(mod_one(q));
    int pos = r - 1;
    while (pos >= 0 && counters[pos] + 1 == bounds[pos]) {
      counters[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++counters[pos];
  }
}

}  // namespace

std::vector<TorsionElement> torsion_candidates(const WeightSystem& ws) {
  ws.check();
  if (!stable_eq_ss(ws))
    throw InfiniteInertiaError(
        "polarization on a wall: some semistable stratum has "
        "positive-dimensional stabilizer");

  long cap = order_cap();
  std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> seen(&lex_less);
  seen.insert(zero_vec(ws.rank));  // identity

  // Every full-rank semistable support contains a full-rank semistable
  // support of size = rank (Caratheodory plus the wall condition), and
  // larger supports have smaller kernels, so size-rank supports suffice.
  Support cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == ws.rank) {
      IntMat m = weight_matrix(ws, cur);
      if (det(m) == 0) return;
      if (!is_ss_support(ws, cur)) return;
      kernel_elements(m, cap, [&](const RatVec& q) {
        seen.insert(q);
        if (static_cast<long>(seen.size()) > cap)
          throw GroupTooLargeError("candidate set exceeds TORQ_ORDER_CAP");
      });
      return;
    }
    for (int i = start; i < ws.count(); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);

  std::vector<TorsionElement> out;
  out.reserve(seen.size());
  for (const auto& q : seen) out.push_back(TorsionElement::from(q));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Sector> inertia_sectors(const WeightSystem& ws) {
  std::vector<Sector> out;
  for (const auto& g : torsion_candidates(ws)) {
    Support s = sector_support(ws, g);
    if (!is_ss_support(ws, s)) continue;
    Sector sec;
    sec.element = g;
    sec.support = s;
    sec.divisor_count = support_multiplicity(ws, s);
    sec.dimension = sec.divisor_count - ws.rank;
    sec.element_order = g.order;
    out.push_back(std::move(sec));
  }
  // torsion_candidates is already (order, representative)-sorted.
  return out;
}

}  // namespace torq
