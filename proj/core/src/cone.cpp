#include "torq/cone.hpp"

#include <stdexcept>

#include "torq/errors.hpp"
#include "torq/simplex.hpp"

namespace torq {

namespace {

void check_ranks(const std::vector<RatVec>& generators, const RatVec& target) {
  for (const auto& g : generators)
    if (g.size() != target.size())
      throw DimensionMismatchError(
          "cone: generator rank " + std::to_string(g.size()) +
          " vs ambient rank " + std::to_string(target.size()));
}

RatVec canonical(const RatVec& v) {
  RatVec out = v;
  for (Rat& q : out) q.canonicalize();
  return out;
}

std::vector<RatVec> canonical(const std::vector<RatVec>& vs) {
  std::vector<RatVec> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(canonical(v));
  return out;
}

}  // namespace

ConeDecision cone_member(const std::vector<RatVec>& generators0,
                         const RatVec& target0) {
  std::vector<RatVec> generators = canonical(generators0);
  RatVec target = canonical(target0);
  check_ranks(generators, target);
  int r = static_cast<int>(target.size());
  int k = static_cast<int>(generators.size());

  std::vector<RatVec> rows(r, RatVec(k, Rat(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) rows[i][j] = generators[j][i];

  LpResult lp = solve_lp(rows, target, RatVec(k, Rat(0)));

  ConeDecision out;
  if (lp.status == LpStatus::optimal) {
    out.member = true;
    out.coefficients = lp.x;
    // Re-substitute; a failure here is a solver bug, not a caller error.
    RatVec sum(r, Rat(0));
    for (int j = 0; j < k; ++j) {
      if (lp.x[j] < 0) throw std::logic_error("cone_member: negative coefficient");
      for (int i = 0; i < r; ++i) sum[i] += lp.x[j] * generators[j][i];
    }
    if (sum != target) throw std::logic_error("cone_member: combination mismatch");
  } else if (lp.status == LpStatus::infeasible) {
    out.member = false;
    out.certificate = lp.farkas;
    for (const auto& g : generators)
      if (dot(g, lp.farkas) > 0)
        throw std::logic_error("cone_member: certificate fails a generator");
    if (dot(target, lp.farkas) <= 0)
      throw std::logic_error("cone_member: certificate fails the target");
  } else {
    throw std::logic_error("cone_member: feasibility LP cannot be unbounded");
  }
  return out;
}

bool span_member(const std::vector<RatVec>& generators0, const RatVec& target0) {
  std::vector<RatVec> generators = canonical(generators0);
  RatVec target = canonical(target0);
  check_ranks(generators, target);
  int r = static_cast<int>(target.size());
  int k = static_cast<int>(generators.size());

  // Gaussian elimination on [generators^T | target].
  std::vector<RatVec> m(r, RatVec(k + 1, Rat(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < k; ++j) m[i][j] = generators[j][i];
    m[i][k] = target[i];
  }
  int row = 0;
  for (int col = 0; col < k && row < r; ++col) {
    int piv = -1;
    for (int i = row; i < r; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    for (int i = 0; i < r; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[row][col];
      for (int j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  for (int i = row; i < r; ++i)
    if (m[i][k] != 0) return false;
  return true;
}

std::optional<RatVec> open_halfspace_witness(const std::vector<RatVec>& vectors0,
                                             int rank) {
  std::vector<RatVec> vectors = canonical(vectors0);
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != rank)
      throw DimensionMismatchError("open_halfspace_witness: rank mismatch");
  if (vectors.empty()) return RatVec(rank, Rat(0));

  // Strict feasibility <v_i, eta> > 0 is scale-invariant, so solve
  // <v_i, eta> >= 1 instead: v_i.(p - q) - s_i = 1 with p, q, s >= 0.
  int k = static_cast<int>(vectors.size());
  int n = 2 * rank + k;
  std::vector<RatVec> rows(k, RatVec(n, Rat(0)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < rank; ++j) {
      rows[i][j] = vectors[i][j];
      rows[i][rank + j] = -vectors[i][j];
    }
    rows[i][2 * rank + i] = -1;
  }
  LpResult lp = solve_lp(rows, RatVec(k, Rat(1)), RatVec(n, Rat(0)));
  if (lp.status != LpStatus::optimal) return std::nullopt;

  RatVec eta(rank, Rat(0));
  for (int j = 0; j < rank; ++j) eta[j] = lp.x[j] - lp.x[rank + j];
  for (const auto& v : vectors)
    if (dot(v, eta) <= 0)
      throw std::logic_error("open_halfspace_witness: witness fails");
  return eta;
}

}  // namespace torq
