#pragma once

// Integer matrices and Smith normal form. The invariant factors drive all
// finite-isotropy computations: the kernel of exp applied to a full-rank
// weight matrix is a product of cyclic groups of the factor orders.

#include <vector>

#include "torq/rational.hpp"

namespace torq {

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMat identity(int n);
};

IntMat mul(const IntMat& x, const IntMat& y);
bool operator==(const IntMat& x, const IntMat& y);

// Fraction-free (Bareiss) determinant; square input only.
Int det(const IntMat& m);

// Rank over Q.
int rank(const IntMat& m);

struct SnfDecomposition {
  IntMat left;               // unimodular, rows x rows
  std::vector<Int> factors;  // min(rows, cols) entries, nonnegative, d_i | d_{i+1}
  IntMat right;              // unimodular, cols x cols

  IntMat diagonal_matrix(int rows, int cols) const;
};

// left * A * right is the diagonal matrix of the invariant factors.
SnfDecomposition snf(const IntMat& A);

}  // namespace torq
