#include "hhx/kernels.hpp"

#include <cstdlib>

namespace hhx::kernels {

bool force_serial() {
  static const bool v = [] {
    const char* e = std::getenv("HHX_SERIAL");
    return e && *e && *e != '0';
  }();
  return v;
}

namespace {
// flops-ish threshold below which spawning threads is a loss
constexpr long kParallelCut = 1 << 18;

inline void matmul_row(const Int* a, const Int* b, Int* c, int m, int k, int i) {
  const Int* arow = a + static_cast<size_t>(i) * m;
  Int* crow = c + static_cast<size_t>(i) * k;
  for (int j = 0; j < k; ++j) crow[j] = 0;
  for (int l = 0; l < m; ++l) {
    const Int& al = arow[l];
    if (al == 0) continue;
    const Int* brow = b + static_cast<size_t>(l) * k;
    for (int j = 0; j < k; ++j) {
      if (brow[j] != 0) crow[j] += al * brow[j];
    }
  }
}
}  // namespace

void matmul_serial(const Int* a, const Int* b, Int* c, int n, int m, int k) {
  for (int i = 0; i < n; ++i) matmul_row(a, b, c, m, k, i);
}

void matmul_omp(const Int* a, const Int* b, Int* c, int n, int m, int k) {
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = 0; i < n; ++i) matmul_row(a, b, c, m, k, i);
}

void matmul(const Int* a, const Int* b, Int* c, int n, int m, int k) {
  if (force_serial() || static_cast<long>(n) * m * k < kParallelCut)
    matmul_serial(a, b, c, n, m, k);
  else
    matmul_omp(a, b, c, n, m, k);
}

namespace {
inline void row_axpy_one(Int* a, int cols, int t, int i, const Int& q) {
  if (q == 0) return;
  Int* ri = a + static_cast<size_t>(i) * cols;
  const Int* rt = a + static_cast<size_t>(t) * cols;
  for (int j = 0; j < cols; ++j) {
    if (rt[j] != 0) ri[j] -= q * rt[j];
  }
}
inline void col_axpy_one(Int* a, int rows, int cols, int t, int j, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < rows; ++i) {
    Int* row = a + static_cast<size_t>(i) * cols;
    if (row[t] != 0) row[j] -= q * row[t];
  }
}
}  // namespace

void rows_axpy_serial(Int* a, int rows, int cols, int t, const std::vector<Int>& q) {
  for (int i = 0; i < rows; ++i)
    if (i != t) row_axpy_one(a, cols, t, i, q[i]);
}

void rows_axpy_omp(Int* a, int rows, int cols, int t, const std::vector<Int>& q) {
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < rows; ++i)
    if (i != t) row_axpy_one(a, cols, t, i, q[i]);
}

void rows_axpy(Int* a, int rows, int cols, int t, const std::vector<Int>& q) {
  if (force_serial() || static_cast<long>(rows) * cols < kParallelCut)
    rows_axpy_serial(a, rows, cols, t, q);
  else
    rows_axpy_omp(a, rows, cols, t, q);
}

void cols_axpy_serial(Int* a, int rows, int cols, int t, const std::vector<Int>& q) {
  for (int j = 0; j < cols; ++j)
    if (j != t) col_axpy_one(a, rows, cols, t, j, q[j]);
}

void cols_axpy_omp(Int* a, int rows, int cols, int t, const std::vector<Int>& q) {
#pragma omp parallel for schedule(dynamic, 16)
  for (int j = 0; j < cols; ++j)
    if (j != t) col_axpy_one(a, rows, cols, t, j, q[j]);
}

void cols_axpy(Int* a, int rows, int cols, int t, const std::vector<Int>& q) {
  if (force_serial() || static_cast<long>(rows) * cols < kParallelCut)
    cols_axpy_serial(a, rows, cols, t, q);
  else
    cols_axpy_omp(a, rows, cols, t, q);
}

}  // namespace hhx::kernels
