#include "torq/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace torq {

namespace {

struct Tableau {
  int m = 0;       // rows
  int n0 = 0;      // original columns; artificials occupy [n0, n0 + m)
  std::vector<RatVec> t;  // m rows of n0 + m entries
  RatVec rhs;             // length m, kept >= 0
  RatVec cost;            // reduced costs, length n0 + m
  std::vector<int> basis; // length m

  void pivot(int r, int c) {
    Rat piv = t[r][c];
    assert(piv != 0);
    int width = n0 + m;
    for (int j = 0; j < width; ++j) t[r][j] /= piv;
    rhs[r] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rat f = t[i][c];
      for (int j = 0; j < width; ++j) t[i][j] -= f * t[r][j];
      rhs[i] -= f * rhs[r];
    }
    if (cost[c] != 0) {
      Rat f = cost[c];
      for (int j = 0; j < width; ++j) cost[j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Bland's rule: entering column = lowest index with negative reduced cost,
  // leaving row = lowest basis index among the ratio-test minima. Returns
  // false when optimal, throws on unbounded (phase callers decide whether
  // that can happen).
  enum class Step { done, pivoted, unbounded };

  Step step(int max_col) {
    int enter = -1;
    for (int j = 0; j < max_col; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) return Step::done;
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = rhs[i] / t[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return Step::unbounded;
    pivot(leave, enter);
    return Step::pivoted;
  }
};

}  // namespace

LpResult solve_lp(const std::vector<RatVec>& rows, const RatVec& b,
                  const RatVec& c0) {
  RatVec c = c0;
  for (Rat& q : c) q.canonicalize();
  int m = static_cast<int>(rows.size());
  int n0 = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("solve_lp: rhs length mismatch");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != n0)
      throw std::invalid_argument("solve_lp: row length mismatch");

  Tableau tb;
  tb.m = m;
  tb.n0 = n0;
  tb.t.assign(m, RatVec(n0 + m, Rat(0)));
  tb.rhs.assign(m, Rat(0));
  tb.basis.assign(m, 0);

  // Sign-normalize so the artificial start basis is feasible. Entries are
  // canonicalized on the way in: GMP comparisons assume reduced form and
  // callers may hand us raw p/q constructions.
  std::vector<int> sign(m, 1);
  for (int i = 0; i < m; ++i) {
    sign[i] = (b[i] < 0) ? -1 : 1;
    for (int j = 0; j < n0; ++j) {
      tb.t[i][j] = sign[i] < 0 ? Rat(-rows[i][j]) : rows[i][j];
      tb.t[i][j].canonicalize();
    }
    tb.t[i][n0 + i] = 1;
    tb.rhs[i] = sign[i] < 0 ? Rat(-b[i]) : b[i];
    tb.rhs[i].canonicalize();
    tb.basis[i] = n0 + i;
  }

  // Phase 1: minimize the sum of artificials. Reduced costs for the
  // artificial basis: original columns get -sum of their entries.
  tb.cost.assign(n0 + m, Rat(0));
  for (int j = 0; j < n0; ++j) {
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += tb.t[i][j];
    tb.cost[j] = -s;
  }

  while (true) {
    auto s = tb.step(n0 + m);
    if (s == Tableau::Step::done) break;
    if (s == Tableau::Step::unbounded)
      throw std::logic_error("phase-1 objective is bounded by construction");
  }

  Rat phase1 = 0;
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] >= n0) phase1 += tb.rhs[i];

  LpResult out;
  if (phase1 > 0) {
    // Farkas certificate from the phase-1 duals: y' = cB . B^{-1}, read off
    // the artificial block which holds B^{-1}; undo the row sign flips.
    out.status = LpStatus::infeasible;
    out.farkas.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) {
      Rat y = 0;
      for (int k = 0; k < m; ++k)
        if (tb.basis[k] >= n0) y += tb.t[k][n0 + i];
      out.farkas[i] = sign[i] < 0 ? Rat(-y) : y;
    }
    return out;
  }

  // Drive leftover artificials out of the basis; a row with no original
  // column to pivot on is a redundant constraint and can be ignored by
  // zeroing it (the basis keeps the artificial at value 0).
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] < n0) continue;
    int piv = -1;
    for (int j = 0; j < n0; ++j)
      if (tb.t[i][j] != 0) {
        piv = j;
        break;
      }
    if (piv >= 0) tb.pivot(i, piv);
  }

  // Phase 2 with the real costs; artificial columns are barred from
  // entering by limiting the column scan to n0.
  tb.cost.assign(n0 + m, Rat(0));
  for (int j = 0; j < n0; ++j) tb.cost[j] = c[j];
  for (int i = 0; i < m; ++i) {
    int bcol = tb.basis[i];
    if (bcol >= n0 || c[bcol] == 0) continue;
    Rat f = c[bcol];
    for (int j = 0; j < n0 + m; ++j) tb.cost[j] -= f * tb.t[i][j];
  }

  while (true) {
    auto s = tb.step(n0);
    if (s == Tableau::Step::done) break;
    if (s == Tableau::Step::unbounded) {
      out.status = LpStatus::unbounded;
      return out;
    }
  }

  out.status = LpStatus::optimal;
  out.x.assign(n0, Rat(0));
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] < n0) out.x[tb.basis[i]] = tb.rhs[i];
  out.objective = 0;
  for (int j = 0; j < n0; ++j) out.objective += c[j] * out.x[j];
  return out;
}

}  // namespace torq
