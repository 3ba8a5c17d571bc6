#include "stg/intmat.hpp"

#include <algorithm>

namespace stg {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::from_rows(const std::vector<std::vector<long long>>& rows) {
  IMat m(static_cast<int>(rows.size()),
         rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols)
      throw DimensionMismatch("ragged rows");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

bool IMat::is_skew() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j <= i; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

IMat mul(const IMat& A, const IMat& B) {
  if (A.cols != B.rows) throw DimensionMismatch("matrix product");
  IMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& v = A.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += v * B.at(k, j);
    }
  return C;
}

IMat transpose(const IMat& A) {
  IMat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

IMat neg(const IMat& A) {
  IMat B = A;
  for (auto& x : B.a) x = -x;
  return B;
}

IMat sub(const IMat& A, const IMat& B) {
  if (A.rows != B.rows || A.cols != B.cols)
    throw DimensionMismatch("matrix difference");
  IMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
  return C;
}

Int det(IMat A) {
  if (A.rows != A.cols) throw DimensionMismatch("det of non-square");
  int n = A.rows;
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (A.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
        A.at(i, j) = t / prev;  // exact by Bareiss
      }
    prev = A.at(k, k);
  }
  return sign * A.at(n - 1, n - 1);
}

namespace {

void col_swap(IMat& m, int i, int j) {
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void col_addmul(IMat& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows; ++r) m.at(r, dst) += q * m.at(r, src);
}

void col_negate(IMat& m, int j) {
  for (int r = 0; r < m.rows; ++r) m.at(r, j) = -m.at(r, j);
}

Int floordiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

ColHnf col_hnf(const IMat& A) {
  ColHnf out;
  out.h = A;
  out.v = IMat::identity(A.cols);
  IMat& H = out.h;
  IMat& V = out.v;
  int c = 0;
  for (int r = 0; r < A.rows && c < A.cols; ++r) {
    // gcd-sweep row r across columns c..end until one nonzero remains
    for (;;) {
      int best = -1;
      for (int j = c; j < A.cols; ++j)
        if (H.at(r, j) != 0 &&
            (best < 0 || abs(H.at(r, j)) < abs(H.at(r, best))))
          best = j;
      if (best < 0) break;  // row r zero on active columns
      if (best != c) {
        col_swap(H, c, best);
        col_swap(V, c, best);
      }
      bool clean = true;
      for (int j = c + 1; j < A.cols; ++j) {
        if (H.at(r, j) == 0) continue;
        Int q = floordiv(H.at(r, j), H.at(r, c));
        col_addmul(H, j, c, -q);
        col_addmul(V, j, c, -q);
        if (H.at(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H.at(r, c) == 0) continue;  // no pivot in this row
    if (H.at(r, c) < 0) {
      col_negate(H, c);
      col_negate(V, c);
    }
    // reduce earlier columns against this pivot for determinism
    for (int j = 0; j < c; ++j) {
      Int q = floordiv(H.at(r, j), H.at(r, c));
      col_addmul(H, j, c, -q);
      col_addmul(V, j, c, -q);
    }
    out.pivot_row.push_back(r);
    ++c;
  }
  out.rank = c;
  return out;
}

std::vector<std::vector<Int>> int_kernel(const IMat& A) {
  ColHnf h = col_hnf(A);
  std::vector<std::vector<Int>> ker;
  for (int j = h.rank; j < A.cols; ++j) {
    std::vector<Int> v(A.cols);
    for (int i = 0; i < A.cols; ++i) v[i] = h.v.at(i, j);
    ker.push_back(std::move(v));
  }
  return ker;
}

std::optional<std::vector<Int>> solve_int(const IMat& A,
                                          const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != A.rows)
    throw DimensionMismatch("solve dimension");
  ColHnf h = col_hnf(A);
  std::vector<Int> y(A.cols, 0);
  std::vector<Int> acc = b;  // residual b - H*y, maintained per row
  // pivots are in columns 0..rank-1 with strictly increasing pivot rows
  int j = 0;
  for (int r = 0; r < A.rows; ++r) {
    Int res = b[r];
    for (int k = 0; k < h.rank; ++k) res -= h.h.at(r, k) * y[k];
    if (j < h.rank && h.pivot_row[j] == r) {
      if (res % h.h.at(r, j) != 0) return std::nullopt;
      y[j] = res / h.h.at(r, j);
      ++j;
    } else if (res != 0) {
      return std::nullopt;
    }
  }
  // x = V*y
  std::vector<Int> x(A.cols, 0);
  for (int i = 0; i < A.cols; ++i)
    for (int k = 0; k < A.cols; ++k) x[i] += h.v.at(i, k) * y[k];
  return x;
}

std::vector<std::vector<Int>> row_hnf_basis(
    std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return {};
  size_t n = rows[0].size();
  for (auto& r : rows)
    if (r.size() != n) throw DimensionMismatch("ragged rows");
  size_t pr = 0;
  for (size_t col = 0; col < n && pr < rows.size(); ++col) {
    for (;;) {
      int best = -1;
      for (size_t i = pr; i < rows.size(); ++i)
        if (rows[i][col] != 0 &&
            (best < 0 || abs(rows[i][col]) < abs(rows[best][col])))
          best = static_cast<int>(i);
      if (best < 0) break;
      std::swap(rows[pr], rows[best]);
      bool clean = true;
      for (size_t i = pr + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = floordiv(rows[i][col], rows[pr][col]);
        for (size_t k = 0; k < n; ++k) rows[i][k] -= q * rows[pr][k];
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[pr][col] == 0) continue;
    if (rows[pr][col] < 0)
      for (size_t k = 0; k < n; ++k) rows[pr][k] = -rows[pr][k];
    for (size_t i = 0; i < pr; ++i) {
      Int q = floordiv(rows[i][col], rows[pr][col]);
      for (size_t k = 0; k < n; ++k) rows[i][k] -= q * rows[pr][k];
    }
    ++pr;
  }
  rows.resize(pr);
  return rows;
}

bool lattice_is_full(const std::vector<std::vector<Int>>& rows, int n) {
  auto basis = row_hnf_basis(rows);
  if (static_cast<int>(basis.size()) != n) return false;
  // echelon with n pivots: full iff every pivot is 1
  for (int i = 0; i < n; ++i) {
    int col = 0;
    while (col < n && basis[i][col] == 0) ++col;
    if (col >= n || basis[i][col] != 1) return false;
  }
  return true;
}

IMat inverse_unimodular(const IMat& A) {
  Int d = det(A);
  if (d != 1 && d != -1) throw Error("matrix is not unimodular");
  int n = A.rows;
  IMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IMat minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc) = A.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = det(minor);
      if ((i + j) % 2) cof = -cof;
      inv.at(i, j) = cof * d;  // adjugate over det, det = +-1
    }
  return inv;
}

}  // namespace stg
