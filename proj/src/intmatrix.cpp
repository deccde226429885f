#include "hhx/intmatrix.hpp"

#include <sstream>
#include <stdexcept>

#include "hhx/kernels.hpp"

namespace hhx {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(int n, const std::vector<std::vector<Int>>& cols) {
  IntMatrix m(n, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != n) throw std::invalid_argument("from_columns: bad column length");
    for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("mul: shape mismatch");
  IntMatrix out(r_, o.c_);
  if (r_ == 0 || o.c_ == 0 || c_ == 0) return out;
  kernels::matmul(a_.data(), o.a_.data(), out.a_.data(), r_, c_, o.c_);
  return out;
}

IntMatrix IntMatrix::add(const IntMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("add: shape mismatch");
  IntMatrix out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

IntMatrix IntMatrix::sub(const IntMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("sub: shape mismatch");
  IntMatrix out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
  return out;
}

IntMatrix IntMatrix::scaled(const Int& s) const {
  IntMatrix out(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& o) const {
  if (r_ != o.r_) throw std::invalid_argument("hconcat: row mismatch");
  IntMatrix out(r_, c_ + o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < o.c_; ++j) out.at(i, c_ + j) = o.at(i, j);
  }
  return out;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& o) const {
  if (c_ != o.c_) throw std::invalid_argument("vconcat: col mismatch");
  IntMatrix out(r_ + o.r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < o.r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(r_ + i, j) = o.at(i, j);
  return out;
}

IntMatrix IntMatrix::kron(const IntMatrix& o) const {
  IntMatrix out(r_ * o.r_, c_ * o.c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      const Int& s = at(i, j);
      if (s == 0) continue;
      for (int p = 0; p < o.r_; ++p)
        for (int q = 0; q < o.c_; ++q)
          if (o.at(p, q) != 0) out.at(i * o.r_ + p, j * o.c_ + q) = s * o.at(p, q);
    }
  return out;
}

IntMatrix IntMatrix::take_cols(int k) const {
  IntMatrix out(r_, k);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < k; ++j) out.at(i, j) = at(i, j);
  return out;
}

IntMatrix IntMatrix::select_cols(const std::vector<int>& idx) const {
  IntMatrix out(r_, static_cast<int>(idx.size()));
  for (int i = 0; i < r_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) out.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return out;
}

IntMatrix IntMatrix::select_rows(const std::vector<int>& idx) const {
  IntMatrix out(static_cast<int>(idx.size()), c_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < c_; ++j) out.at(static_cast<int>(i), j) = at(idx[i], j);
  return out;
}

std::vector<Int> IntMatrix::col(int j) const {
  std::vector<Int> v(r_);
  for (int i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

void IntMatrix::set_col(int j, const std::vector<Int>& v) {
  for (int i = 0; i < r_; ++i) at(i, j) = v[i];
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != c_) throw std::invalid_argument("apply: length mismatch");
  std::vector<Int> y(r_, Int(0));
  for (int i = 0; i < r_; ++i) {
    const Int* row = row_ptr(i);
    for (int j = 0; j < c_; ++j)
      if (row[j] != 0 && x[j] != 0) y[i] += row[j] * x[j];
  }
  return y;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < r_; ++k) std::swap(at(k, i), at(k, j));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < c_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

uint64_t IntMatrix::structural_hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(r_));
  mix(static_cast<uint64_t>(c_));
  for (const Int& x : a_) {
    mix(mpz_fdiv_ui(x.get_mpz_t(), 2305843009213693951ull));
    if (sgn(x) < 0) mix(0x9e3779b97f4a7c15ull);
  }
  return h;
}

Int nearest_div(const Int& a, const Int& b) {
  Int babs = abs(b);
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), babs.get_mpz_t());
  if (r * 2 > babs) q += 1;  // r in [0, |b|), round to nearest multiple
  if (sgn(b) < 0) q = -q;
  return q;
}

}  // namespace hhx
