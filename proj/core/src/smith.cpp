#include "torq/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace torq {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("IntMat mul: shape mismatch");
  IntMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

bool operator==(const IntMat& x, const IntMat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

Int det(const IntMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: square input required");
  int n = m.rows;
  if (n == 0) return 1;
  IntMat b = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (b.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (b.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int v = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
        b.at(i, j) = v / prev;  // exact by Bareiss
      }
    prev = b.at(k, k);
  }
  return sign > 0 ? b.at(n - 1, n - 1) : Int(-b.at(n - 1, n - 1));
}

int rank(const IntMat& m) {
  std::vector<RatVec> rows(m.rows, RatVec(m.cols, Rat(0)));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) rows[i][j] = Rat(m.at(i, j));
  int rk = 0;
  for (int col = 0; col < m.cols && rk < m.rows; ++col) {
    int piv = -1;
    for (int i = rk; i < m.rows; ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rk]);
    for (int i = 0; i < m.rows; ++i) {
      if (i == rk || rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[rk][col];
      for (int j = col; j < m.cols; ++j) rows[i][j] -= f * rows[rk][j];
    }
    ++rk;
  }
  return rk;
}

IntMat SnfDecomposition::diagonal_matrix(int rows, int cols) const {
  IntMat d(rows, cols);
  for (size_t i = 0; i < factors.size(); ++i) d.at(static_cast<int>(i), static_cast<int>(i)) = factors[i];
  return d;
}

namespace {

int cmp_abs(const Int& x, const Int& y) {
  return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
}

struct Worker {
  IntMat b, u, v;  // invariant: u * A * v == b

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < b.cols; ++c) std::swap(b.at(i, c), b.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < b.rows; ++r) std::swap(b.at(r, i), b.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, const Int& f) {  // row dst += f * row src
    for (int c = 0; c < b.cols; ++c) b.at(dst, c) += f * b.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
  }
  void add_col(int dst, int src, const Int& f) {
    for (int r = 0; r < b.rows; ++r) b.at(r, dst) += f * b.at(r, src);
    for (int r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < b.cols; ++c) b.at(i, c) = -b.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }

  // Clears row t and column t (except the pivot) with gcd steps, pulling the
  // smallest nonzero entry of the trailing block into the pivot slot first.
  void clear_at(int t) {
    while (true) {
      int bi = -1, bj = -1;
      for (int i = t; i < b.rows; ++i)
        for (int j = t; j < b.cols; ++j) {
          if (b.at(i, j) == 0) continue;
          if (bi < 0 || cmp_abs(b.at(i, j), b.at(bi, bj)) < 0) {
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) return;  // trailing block vanished
      swap_rows(t, bi);
      swap_cols(t, bj);

      bool clean = true;
      for (int i = t + 1; i < b.rows; ++i) {
        if (b.at(i, t) == 0) continue;
        Int q = b.at(i, t) / b.at(t, t);  // truncated division
        add_row(i, t, -q);
        if (b.at(i, t) != 0) clean = false;  // remainder becomes next pivot
      }
      for (int j = t + 1; j < b.cols; ++j) {
        if (b.at(t, j) == 0) continue;
        Int q = b.at(t, j) / b.at(t, t);
        add_col(j, t, -q);
        if (b.at(t, j) != 0) clean = false;
      }
      if (clean) {
        if (b.at(t, t) < 0) negate_row(t);
        return;
      }
    }
  }
};

}  // namespace

SnfDecomposition snf(const IntMat& A) {
  Worker w;
  w.b = A;
  w.u = IntMat::identity(A.rows);
  w.v = IntMat::identity(A.cols);

  int len = std::min(A.rows, A.cols);
  for (int t = 0; t < len; ++t) w.clear_at(t);

  // Enforce the divisibility chain; zero factors sink to the end.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int t = 0; t + 1 < len; ++t) {
      Int a = w.b.at(t, t), c = w.b.at(t + 1, t + 1);
      if (a == 0 && c != 0) {
        w.swap_rows(t, t + 1);
        w.swap_cols(t, t + 1);
        moved = true;
      } else if (a != 0 && c % a != 0) {
        w.add_col(t, t + 1, Int(1));  // puts c into column t at row t+1
        w.clear_at(t);
        w.clear_at(t + 1);
        moved = true;
      }
    }
  }

  SnfDecomposition out;
  out.left = w.u;
  out.right = w.v;
  out.factors.resize(len);
  for (int t = 0; t < len; ++t) out.factors[t] = w.b.at(t, t);
  return out;
}

}  // namespace torq
