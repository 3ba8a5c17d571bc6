#ifndef STG_INTMAT_HPP
#define STG_INTMAT_HPP

#include <optional>
#include <vector>

#include "stg/tvalue.hpp"

namespace stg {

// Dense integer matrix with arbitrary-precision entries.
struct IMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static IMat identity(int n);
  static IMat from_rows(const std::vector<std::vector<long long>>& rows);

  bool operator==(const IMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  bool is_skew() const;  // A^T = -A (implies zero diagonal)
};

IMat mul(const IMat& A, const IMat& B);
IMat transpose(const IMat& A);
IMat neg(const IMat& A);
IMat sub(const IMat& A, const IMat& B);
Int det(IMat A);  // Bareiss fraction-free elimination

// Column-style Hermite reduction: returns (H, V) with A*V = H, V unimodular,
// H in column echelon form (pivots positive, zero columns last).
struct ColHnf {
  IMat h, v;
  std::vector<int> pivot_row;  // pivot_row[j] for each pivot column j
  int rank = 0;
};
ColHnf col_hnf(const IMat& A);

// basis of { x in Z^n : A x = 0 }
std::vector<std::vector<Int>> int_kernel(const IMat& A);

// one integer solution of A x = b, if any
std::optional<std::vector<Int>> solve_int(const IMat& A,
                                          const std::vector<Int>& b);

// Row-style Hermite basis of the lattice spanned by the given row vectors:
// deterministic, pivots positive, entries above pivots reduced.
std::vector<std::vector<Int>> row_hnf_basis(std::vector<std::vector<Int>> rows);

// lattice spanned by `rows` equals Z^n
bool lattice_is_full(const std::vector<std::vector<Int>>& rows, int n);

// inverse of a matrix with det = +-1
IMat inverse_unimodular(const IMat& A);

}  // namespace stg

#endif
