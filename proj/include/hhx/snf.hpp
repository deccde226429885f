#pragma once
#include <optional>

#include "hhx/intmatrix.hpp"

namespace hhx {

// U * m * V = D with U, V unimodular, D diagonal, diag entries >= 0 and
// d_i | d_{i+1}. Total on every shape including empty and all-zero input.
struct SnfResult {
  IntMatrix D;
  IntMatrix U, V;  // empty unless with_transforms
  IntMatrix Uinv;  // empty unless with_inverse; Uinv * U = identity
  bool with_transforms = false;
  std::vector<Int> diag;  // length min(rows, cols)
  int rank = 0;           // number of nonzero diagonal entries
};

// with_inverse tracks U^{-1} through the same row operations; that is far
// cheaper than inverting U afterwards, whose entries can be much larger
// than the input's.
SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms = true, bool with_inverse = false);

// Basis of the column span: exactly rank(a) columns generating the same
// lattice. Computed through the Smith form so entries stay controlled even
// on wide inputs where naive column reduction blows up.
IntMatrix lattice_basis(const IntMatrix& a);

// X with A * X = B over Z, if it exists.
std::optional<IntMatrix> solve_columns(const IntMatrix& a, const IntMatrix& b);

// Columns spanning {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

// Does col-span(a) contain every column of b?
bool lattice_contains(const IntMatrix& a, const IntMatrix& b);

}  // namespace hhx
