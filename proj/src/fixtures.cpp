#include "hhx/fixtures.hpp"

#include <stdexcept>

namespace hhx {
namespace fixtures {

namespace {

// column (i,j) of the multiplication table = generator_i * generator_j
IntMatrix table(int n, const std::vector<std::vector<std::vector<Int>>>& prod) {
  IntMatrix t(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int u = 0; u < n; ++u) t.at(u, i * n + j) = prod[i][j][u];
  return t;
}

}  // namespace

Algebra integers() {
  IntMatrix t(1, 1);
  t.at(0, 0) = 1;
  return Algebra::make(FGAbGroup::free_group(1), std::move(t), {Int(1)}, "Z");
}

Algebra cyclic_ring(const Int& m) {
  IntMatrix t(1, 1);
  t.at(0, 0) = 1;
  return Algebra::make(FGAbGroup::cyclic(m), std::move(t), {Int(1)}, "Z/" + m.get_str());
}

Algebra dual_numbers() {
  // generators 1, x with x^2 = 0
  std::vector<std::vector<std::vector<Int>>> p = {
      {{Int(1), Int(0)}, {Int(0), Int(1)}},
      {{Int(0), Int(1)}, {Int(0), Int(0)}},
  };
  return Algebra::make(FGAbGroup::free_group(2), table(2, p), {Int(1), Int(0)}, "Z[x]/(x^2)");
}

Algebra group_ring_c2() {
  // generators 1, t with t^2 = 1
  std::vector<std::vector<std::vector<Int>>> p = {
      {{Int(1), Int(0)}, {Int(0), Int(1)}},
      {{Int(0), Int(1)}, {Int(1), Int(0)}},
  };
  return Algebra::make(FGAbGroup::free_group(2), table(2, p), {Int(1), Int(0)}, "Z[t]/(t^2-1)");
}

namespace {

Algebra idempotent_pair(FGAbGroup g, const std::string& name) {
  // generators e1, e2 with e_i e_j = delta_ij e_i; unit e1 + e2
  std::vector<std::vector<std::vector<Int>>> p = {
      {{Int(1), Int(0)}, {Int(0), Int(0)}},
      {{Int(0), Int(0)}, {Int(0), Int(1)}},
  };
  return Algebra::make(std::move(g), table(2, p), {Int(1), Int(1)}, name);
}

}  // namespace

Algebra split_pair() { return idempotent_pair(FGAbGroup::free_group(2), "ZxZ"); }

Algebra f3xf3() { return idempotent_pair(FGAbGroup::from_moduli({Int(3), Int(3)}), "F3xF3"); }

AbHom c2_sign() {
  Algebra a = group_ring_c2();
  IntMatrix m = IntMatrix::identity(2);
  m.at(1, 1) = -1;
  return AbHom::make(a.group, a.group, std::move(m));
}

AbHom dual_sign() {
  Algebra a = dual_numbers();
  IntMatrix m = IntMatrix::identity(2);
  m.at(1, 1) = -1;
  return AbHom::make(a.group, a.group, std::move(m));
}

AbHom pair_swap(const Algebra& a) {
  if (a.n() != 2) throw std::invalid_argument("pair_swap: needs the two-idempotent presentation");
  IntMatrix m(2, 2);
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  return AbHom::make(a.group, a.group, std::move(m));
}

Algebra by_name(const std::string& name) {
  if (name == "integers") return integers();
  if (name == "dual-numbers") return dual_numbers();
  if (name == "group-ring-c2") return group_ring_c2();
  if (name == "split-pair") return split_pair();
  if (name == "f3xf3") return f3xf3();
  if (name.rfind("mod-", 0) == 0) return cyclic_ring(Int(name.substr(4)));
  if (name.rfind("matrix-", 0) == 0) {
    size_t dash = name.find('-', 7);
    if (dash != std::string::npos) {
      int r = std::stoi(name.substr(7, dash - 7));
      return matrix_algebra(by_name(name.substr(dash + 1)), r);
    }
  }
  throw std::invalid_argument("unknown algebra name: " + name);
}

}  // namespace fixtures
}  // namespace hhx
