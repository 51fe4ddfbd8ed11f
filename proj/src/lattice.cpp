#include "sp4/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace sp4 {

ZMat zmat_identity(int n) {
  ZMat m(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = static_cast<int>(b[0].size());
  ZMat r(n, std::vector<Int>(m));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

ZMat zmat_transpose(const ZMat& a) {
  int n = static_cast<int>(a.size());
  int m = static_cast<int>(a[0].size());
  ZMat r(m, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) r[j][i] = a[i][j];
  return r;
}

Int zmat_det(ZMat a) {
  // Bareiss fraction-free elimination.
  int n = static_cast<int>(a.size());
  Int prev = 1;
  int sign = 1;
  for (int col = 0; col < n - 1; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int j = col + 1; j < n; ++j)
        a[r][j] = (a[col][col] * a[r][j] - a[r][col] * a[col][j]) / prev;
      a[r][col] = 0;
    }
    prev = a[col][col];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

SmithResult smith_normal_form(const ZMat& a0) {
  int rows = static_cast<int>(a0.size());
  int cols = static_cast<int>(a0[0].size());
  SmithResult res{zmat_identity(rows), a0, zmat_identity(cols)};
  ZMat& s = res.s;
  ZMat& u = res.u;
  ZMat& v = res.v;

  auto row_swap = [&](int i, int j) {
    std::swap(s[i], s[j]);
    std::swap(u[i], u[j]);
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(s[r][i], s[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
  };
  auto row_addmul = [&](int dst, int src, const Int& f) {
    for (int j = 0; j < cols; ++j) s[dst][j] += f * s[src][j];
    for (int j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
  };
  auto col_addmul = [&](int dst, int src, const Int& f) {
    for (int r = 0; r < rows; ++r) s[r][dst] += f * s[r][src];
    for (int r = 0; r < cols; ++r) v[r][dst] += f * v[r][src];
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < cols; ++j) s[i][j] = -s[i][j];
    for (int j = 0; j < rows; ++j) u[i][j] = -u[i][j];
  };

  int k = 0;
  int limit = std::min(rows, cols);
  while (k < limit) {
    // Find a nonzero pivot in the trailing block.
    int pr = -1, pc = -1;
    for (int i = k; i < rows && pr < 0; ++i)
      for (int j = k; j < cols; ++j)
        if (s[i][j] != 0) { pr = i; pc = j; break; }
    if (pr < 0) break;
    row_swap(k, pr);
    col_swap(k, pc);

    // Euclidean sweeps until the pivot divides its row and column.
    bool again = true;
    while (again) {
      again = false;
      for (int i = k + 1; i < rows; ++i) {
        if (s[i][k] == 0) continue;
        Int q = s[i][k] / s[k][k];
        row_addmul(i, k, -q);
        if (s[i][k] != 0) {
          row_swap(k, i);
          again = true;
        }
      }
      for (int j = k + 1; j < cols; ++j) {
        if (s[k][j] == 0) continue;
        Int q = s[k][j] / s[k][k];
        col_addmul(j, k, -q);
        if (s[k][j] != 0) {
          col_swap(k, j);
          again = true;
        }
      }
    }
    // Divisibility condition against the rest of the block.
    bool fixed = false;
    for (int i = k + 1; i < rows && !fixed; ++i)
      for (int j = k + 1; j < cols && !fixed; ++j)
        if (s[i][j] % s[k][k] != 0) {
          row_addmul(k, i, 1);
          fixed = true;
        }
    if (fixed) continue;
    if (s[k][k] < 0) row_neg(k);
    ++k;
  }
  return res;
}

ZMat integer_kernel(const ZMat& a) {
  // x with A x = 0  <=>  (column operations tracked by V) kernel spanned by
  // the V-columns past the rank.
  SmithResult sm = smith_normal_form(a);
  int cols = static_cast<int>(a[0].size());
  int limit = std::min(a.size(), a[0].size());
  int rank = 0;
  for (int i = 0; i < limit; ++i)
    if (sm.s[i][i] != 0) ++rank;
  ZMat basis;
  for (int j = rank; j < cols; ++j) {
    std::vector<Int> col(cols);
    for (int r = 0; r < cols; ++r) col[r] = sm.v[r][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

ZMat extend_to_unimodular(const std::vector<Int>& c) {
  int n = static_cast<int>(c.size());
  ZMat row(1, c);
  SmithResult sm = smith_normal_form(row);
  if (sm.s[0][0] != 1) throw std::domain_error("extend_to_unimodular: vector not primitive");
  // c * V = e1, so V^-1 has first row c; V^-1 = adjugate path avoided by
  // re-solving: rows of V^-1 are the standard basis expressed via V.
  // For a 1 x n Smith, U = (1); c = e1 * V^-1. Invert V by Gauss over Q and
  // clear denominators? V is unimodular, so its exact integer inverse comes
  // from repeated solves; easier: accumulate the inverse of the elementary
  // column ops. Simpler and adequate here: invert via adjugate using Bareiss
  // determinant cofactors (n <= 6).
  const ZMat& v = sm.v;
  ZMat inv(n, std::vector<Int>(n));
  Int detv = zmat_det(v);
  assert(detv == 1 || detv == -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // Cofactor C_ji.
      ZMat minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Int> mr;
        for (int s2 = 0; s2 < n; ++s2) {
          if (s2 == i) continue;
          mr.push_back(v[r][s2]);
        }
        minor.push_back(std::move(mr));
      }
      Int cof = n == 1 ? Int(1) : zmat_det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      inv[i][j] = detv == 1 ? cof : -cof;
    }
  if (inv[0] != c) {
    // c * V = -e1 case: flip two rows to keep the determinant unimodular.
    for (Int& x : inv[0]) x = -x;
    if (inv[0] != c) throw std::domain_error("extend_to_unimodular: internal sign error");
    if (n > 1)
      for (Int& x : inv[1]) x = -x;
  }
  return inv;
}

ZMat solve_left(const ZMat& a, const ZMat& b) {
  // X A = B: transpose to A^T X^T = B^T and use Smith on A^T:
  // U A^T V = S => X^T = V S^+ U B^T when consistent and integral.
  ZMat at = zmat_transpose(a);
  ZMat bt = zmat_transpose(b);
  SmithResult sm = smith_normal_form(at);
  int rows_at = static_cast<int>(at.size());
  int cols_at = static_cast<int>(at[0].size());
  int mrhs = static_cast<int>(bt[0].size());
  ZMat ub = zmat_mul(sm.u, bt);
  // y = S^+ ub must satisfy S y = ub exactly.
  ZMat y(cols_at, std::vector<Int>(mrhs));
  int limit = std::min(rows_at, cols_at);
  for (int i = 0; i < rows_at; ++i) {
    for (int j = 0; j < mrhs; ++j) {
      if (i < limit && sm.s[i][i] != 0) {
        if (ub[i][j] % sm.s[i][i] != 0)
          throw std::domain_error("solve_left: no integral solution");
        y[i][j] = ub[i][j] / sm.s[i][i];
      } else if (ub[i][j] != 0) {
        throw std::domain_error("solve_left: inconsistent system");
      }
    }
  }
  ZMat xt = zmat_mul(sm.v, y);
  return zmat_transpose(xt);
}

} // namespace sp4
