#pragma once
#include "hhx/intmatrix.hpp"

// Exact integer compute kernels. Each has a serial reference implementation
// and an OpenMP variant; results are required to be bit-identical (the
// parallel loops are over independent rows/columns). HHX_SERIAL=1 forces the
// serial path everywhere.
namespace hhx::kernels {

bool force_serial();

// C = A*B, A is n x m, B is m x k, all row-major. C must be preallocated.
void matmul_serial(const Int* a, const Int* b, Int* c, int n, int m, int k);
void matmul_omp(const Int* a, const Int* b, Int* c, int n, int m, int k);
void matmul(const Int* a, const Int* b, Int* c, int n, int m, int k);

// rows[i] -= q[i] * rows[t] applied to a row-major block, skipping row t.
// Used by the elimination inner loop of the Smith reduction.
void rows_axpy_serial(Int* a, int rows, int cols, int t, const std::vector<Int>& q);
void rows_axpy_omp(Int* a, int rows, int cols, int t, const std::vector<Int>& q);
void rows_axpy(Int* a, int rows, int cols, int t, const std::vector<Int>& q);

// cols[j] -= q[j] * cols[t], skipping column t.
void cols_axpy_serial(Int* a, int rows, int cols, int t, const std::vector<Int>& q);
void cols_axpy_omp(Int* a, int rows, int cols, int t, const std::vector<Int>& q);
void cols_axpy(Int* a, int rows, int cols, int t, const std::vector<Int>& q);

}  // namespace hhx::kernels
