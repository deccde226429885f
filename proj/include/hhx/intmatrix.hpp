#pragma once
#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace hhx {

using Int = mpz_class;

// Dense row-major matrix over Z. Immutable by convention once built;
// all mutating helpers are for construction code.
class IntMatrix {
public:
  IntMatrix() : r_(0), c_(0) {}
  IntMatrix(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {}

  static IntMatrix identity(int n);
  static IntMatrix from_columns(int n, const std::vector<std::vector<Int>>& cols);

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Int* row_ptr(int i) const { return a_.data() + static_cast<size_t>(i) * c_; }
  Int* row_ptr(int i) { return a_.data() + static_cast<size_t>(i) * c_; }

  bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& o) const;  // dispatches to kernels
  IntMatrix operator*(const IntMatrix& o) const { return mul(o); }
  IntMatrix add(const IntMatrix& o) const;
  IntMatrix sub(const IntMatrix& o) const;
  IntMatrix negated() const;
  IntMatrix scaled(const Int& s) const;
  IntMatrix hconcat(const IntMatrix& o) const;  // [this | o]
  IntMatrix vconcat(const IntMatrix& o) const;  // [this ; o]
  IntMatrix kron(const IntMatrix& o) const;     // Kronecker product, row-major index (i,j) -> i*o.rows()+j
  IntMatrix take_cols(int k) const;             // first k columns
  IntMatrix select_cols(const std::vector<int>& idx) const;
  IntMatrix select_rows(const std::vector<int>& idx) const;

  std::vector<Int> col(int j) const;
  void set_col(int j, const std::vector<Int>& v);
  std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);

  std::string to_string() const;
  uint64_t structural_hash() const;

private:
  int r_, c_;
  std::vector<Int> a_;
};

// q closest to a/b; |a - q*b| <= |b|/2. b != 0.
Int nearest_div(const Int& a, const Int& b);

}  // namespace hhx
