#include "hhx/snf.hpp"

#include <stdexcept>

#include "hhx/kernels.hpp"

namespace hhx {

namespace {

// Find the entry of minimal nonzero absolute value in m[t.., t..].
bool min_pivot(const IntMatrix& m, int t, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = t; i < m.rows(); ++i) {
    const Int* row = m.row_ptr(i);
    for (int j = t; j < m.cols(); ++j) {
      if (row[j] == 0) continue;
      Int a = abs(row[j]);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

struct Work {
  IntMatrix d;
  IntMatrix u, v, ui;  // row transform, column transform, inverse row transform
  bool tu = false, tv = false, tui = false;

  void swap_rows(int i, int j) {
    if (i == j) return;
    d.swap_rows(i, j);
    if (tu) u.swap_rows(i, j);
    if (tui) ui.swap_cols(i, j);  // inverse transform takes the column op
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    d.swap_cols(i, j);
    if (tv) v.swap_cols(i, j);
  }
  // col j += s * col t (on d and v)
  void col_addmul(int j, int t, const Int& s) {
    if (s == 0) return;
    for (int i = 0; i < d.rows(); ++i)
      if (d.at(i, t) != 0) d.at(i, j) += s * d.at(i, t);
    if (tv)
      for (int i = 0; i < v.rows(); ++i)
        if (v.at(i, t) != 0) v.at(i, j) += s * v.at(i, t);
  }
  void negate_row(int i) {
    for (int j = 0; j < d.cols(); ++j) d.at(i, j) = -d.at(i, j);
    if (tu)
      for (int j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
    if (tui)
      for (int r = 0; r < ui.rows(); ++r) ui.at(r, i) = -ui.at(r, i);
  }

  // Batched elimination of column t below the pivot (t,t): data-parallel over rows.
  void eliminate_col_batch(int t) {
    int r = d.rows();
    std::vector<Int> q(r, Int(0));
    bool any = false;
    for (int i = t + 1; i < r; ++i) {
      if (d.at(i, t) != 0) {
        q[i] = nearest_div(d.at(i, t), d.at(t, t));
        if (q[i] != 0) any = true;
      }
    }
    if (!any) return;
    kernels::rows_axpy(d.row_ptr(0), r, d.cols(), t, q);
    if (tu) kernels::rows_axpy(u.row_ptr(0), r, u.cols(), t, q);
    if (tui)  // (row_i -= q_i row_t) inverts to col_t += sum q_i col_i
      for (int i = t + 1; i < r; ++i)
        if (q[i] != 0)
          for (int x = 0; x < ui.rows(); ++x)
            if (ui.at(x, i) != 0) ui.at(x, t) += q[i] * ui.at(x, i);
  }
  void eliminate_row_batch(int t) {
    int c = d.cols();
    std::vector<Int> q(c, Int(0));
    bool any = false;
    for (int j = t + 1; j < c; ++j) {
      if (d.at(t, j) != 0) {
        q[j] = nearest_div(d.at(t, j), d.at(t, t));
        if (q[j] != 0) any = true;
      }
    }
    if (!any) return;
    kernels::cols_axpy(d.row_ptr(0), d.rows(), c, t, q);
    if (tv) kernels::cols_axpy(v.row_ptr(0), v.rows(), v.cols(), t, q);
  }

  bool cross_clear(int t) {
    for (int i = t + 1; i < d.rows(); ++i)
      if (d.at(i, t) != 0) return false;
    for (int j = t + 1; j < d.cols(); ++j)
      if (d.at(t, j) != 0) return false;
    return true;
  }

  // Diagonalize the trailing submatrix starting at t0. Entries before t0 are
  // assumed already diagonal and untouched (all operations stay in [t0..)).
  int diagonalize_from(int t0) {
    int n = std::min(d.rows(), d.cols());
    int t = t0;
    for (; t < n; ++t) {
      int pi, pj;
      if (!min_pivot(d, t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      while (true) {
        eliminate_col_batch(t);
        eliminate_row_batch(t);
        if (cross_clear(t)) break;
        if (min_pivot(d, t, pi, pj)) {
          swap_rows(t, pi);
          swap_cols(t, pj);
        }
      }
      if (d.at(t, t) < 0) negate_row(t);
    }
    return t;  // nonzero diagonal count
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms, bool with_inverse) {
  Work w;
  w.d = m;
  w.tu = w.tv = with_transforms;
  w.tui = with_inverse;
  if (with_transforms) {
    w.u = IntMatrix::identity(m.rows());
    w.v = IntMatrix::identity(m.cols());
  }
  if (with_inverse) w.ui = IntMatrix::identity(m.rows());
  int rank = w.diagonalize_from(0);
  // enforce d_i | d_{i+1}: couple the columns and rediagonalize; the product
  // of the leading invariant factors strictly shrinks, so this terminates
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < rank; ++i) {
      if (w.d.at(i + 1, i + 1) % w.d.at(i, i) == 0) continue;
      w.col_addmul(i, i + 1, Int(1));
      w.diagonalize_from(i);
      changed = true;
    }
  }

  SnfResult res;
  res.with_transforms = with_transforms;
  res.D = std::move(w.d);
  if (with_transforms) {
    res.U = std::move(w.u);
    res.V = std::move(w.v);
  }
  if (with_inverse) res.Uinv = std::move(w.ui);
  int n = std::min(m.rows(), m.cols());
  res.diag.resize(n);
  res.rank = rank;
  for (int i = 0; i < n; ++i) res.diag[i] = res.D.at(i, i);
  return res;
}

IntMatrix lattice_basis(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return IntMatrix(a.rows(), 0);
  // a = U^{-1} D V^{-1} with V unimodular, so the column span equals the span
  // of U^{-1}D, whose nonzero columns are d_i * (U^{-1} e_i). Going through
  // the Smith form keeps entries small where naive column reduction explodes.
  Work w;
  w.d = a;
  w.tui = true;
  w.ui = IntMatrix::identity(a.rows());
  int rank = w.diagonalize_from(0);
  IntMatrix basis(a.rows(), rank);
  for (int i = 0; i < rank; ++i) {
    const Int& di = w.d.at(i, i);
    for (int r = 0; r < a.rows(); ++r)
      if (w.ui.at(r, i) != 0) basis.at(r, i) = di * w.ui.at(r, i);
  }
  return basis;
}

std::optional<IntMatrix> solve_columns(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_columns: row mismatch");
  SnfResult s = smith_normal_form(a, true);
  IntMatrix w = s.U.mul(b);
  IntMatrix x0(a.cols(), b.cols());
  int n = static_cast<int>(s.diag.size());
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) {
      const Int& wi = w.at(i, j);
      if (i < n && s.diag[i] != 0) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), wi.get_mpz_t(), s.diag[i].get_mpz_t());
        if (r != 0) return std::nullopt;
        x0.at(i, j) = q;
      } else if (wi != 0) {
        return std::nullopt;
      }
    }
  }
  return s.V.mul(x0);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  if (a.rows() == 0) return IntMatrix::identity(a.cols());
  SnfResult s = smith_normal_form(a, true);
  std::vector<int> idx;
  for (int j = 0; j < a.cols(); ++j)
    if (j >= static_cast<int>(s.diag.size()) || s.diag[j] == 0) idx.push_back(j);
  return s.V.select_cols(idx);
}

bool lattice_contains(const IntMatrix& a, const IntMatrix& b) {
  return solve_columns(a, b).has_value();
}

}  // namespace hhx
