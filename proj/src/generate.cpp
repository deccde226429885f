#include "hhx/generate.hpp"

#include <stdexcept>

#include "hhx/fixtures.hpp"

namespace hhx {
namespace gen {

long Rng::draw(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("draw: empty range");
  uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
  uint64_t bound = (UINT64_MAX / range) * range;
  uint64_t v;
  do {
    v = eng();
  } while (v >= bound);
  return lo + static_cast<long>(v % range);
}

IntMatrix random_unimodular(Rng& r, int n, int steps, long amp) {
  IntMatrix w = IntMatrix::identity(n);
  if (n == 1) {
    if (r.coin()) w.at(0, 0) = -1;
    return w;
  }
  for (int s = 0; s < steps; ++s) {
    int op = static_cast<int>(r.draw(0, 2));
    int i = static_cast<int>(r.draw(0, n - 1));
    int j = static_cast<int>(r.draw(0, n - 2));
    if (j >= i) ++j;
    if (op == 0) {
      Int c(r.draw(-amp, amp));
      for (int k = 0; k < n; ++k) w.at(j, k) += c * w.at(i, k);
    } else if (op == 1) {
      w.swap_rows(i, j);
    } else {
      for (int k = 0; k < n; ++k) w.at(i, k) = -w.at(i, k);
    }
  }
  return w;
}

IntMatrix unimodular_inverse(const IntMatrix& w) {
  auto inv = solve_columns(w, IntMatrix::identity(w.rows()));
  if (!inv || !w.mul(*inv).is_identity()) throw std::invalid_argument("unimodular_inverse: not unimodular");
  return *inv;
}

Algebra transport(const Algebra& a, const IntMatrix& w, const std::string& name) {
  IntMatrix winv = unimodular_inverse(w);
  FGAbGroup g2 = FGAbGroup::make(a.n(), w.mul(a.group.rels()));
  IntMatrix table = w.mul(a.mult.m).mul(winv.kron(winv));
  std::vector<Int> unit2 = w.apply(a.unit.coords);
  return Algebra::make(std::move(g2), std::move(table), std::move(unit2), name);
}

Bimodule transport(const Bimodule& m, const Algebra& a2, const IntMatrix& wa, const Algebra& b2,
                   const IntMatrix& wb, const IntMatrix& v, const std::string& name) {
  IntMatrix vinv = unimodular_inverse(v);
  IntMatrix wainv = unimodular_inverse(wa);
  IntMatrix wbinv = unimodular_inverse(wb);
  FGAbGroup g2 = FGAbGroup::make(m.n(), v.mul(m.group.rels()));
  IntMatrix l2 = v.mul(m.laction.m).mul(wainv.kron(vinv));
  IntMatrix r2 = v.mul(m.raction.m).mul(vinv.kron(wbinv));
  return Bimodule::make(a2, b2, std::move(g2), std::move(l2), std::move(r2), name);
}

AbHom transport_hom(const AbHom& f, const FGAbGroup& g2, const IntMatrix& w) {
  return AbHom::make(g2, g2, w.mul(f.m).mul(unimodular_inverse(w)));
}

namespace {

struct BaseAlgebra {
  Algebra a;
  AbHom aut;  // a nontrivial automorphism when one exists, identity otherwise
};

BaseAlgebra base_algebra(long kind) {
  switch (kind) {
    case 0: {
      Algebra a = fixtures::integers();
      return {a, AbHom::identity(a.group)};
    }
    case 1: {
      Algebra a = fixtures::cyclic_ring(Int(2));
      return {a, AbHom::identity(a.group)};
    }
    case 2: {
      Algebra a = fixtures::cyclic_ring(Int(3));
      return {a, AbHom::identity(a.group)};
    }
    case 3: {
      Algebra a = fixtures::cyclic_ring(Int(4));
      return {a, AbHom::identity(a.group)};
    }
    case 4:
      return {fixtures::dual_numbers(), fixtures::dual_sign()};
    case 5:
      return {fixtures::group_ring_c2(), fixtures::c2_sign()};
    case 6: {
      Algebra a = fixtures::split_pair();
      return {a, fixtures::pair_swap(a)};
    }
    default: {
      Algebra a = fixtures::f3xf3();
      return {a, fixtures::pair_swap(a)};
    }
  }
}

struct Transported {
  Algebra a;
  IntMatrix w;
  AbHom aut;
};

Transported random_transport(Rng& r, const BaseAlgebra& base) {
  IntMatrix w = random_unimodular(r, base.a.n());
  Algebra a2 = transport(base.a, w, base.a.name + "'");
  AbHom aut = transport_hom(base.aut, a2.group, w);
  return {std::move(a2), std::move(w), std::move(aut)};
}

}  // namespace

Algebra random_algebra(Rng& r) {
  BaseAlgebra base = base_algebra(r.draw(0, 7));
  return random_transport(r, base).a;
}

TwistedAlgebraInstance random_twisted_algebra(Rng& r) {
  BaseAlgebra base = base_algebra(r.draw(0, 7));
  Transported t = random_transport(r, base);
  std::string name = t.a.name;
  return {std::move(t.a), std::move(t.aut), std::move(name)};
}

Bimodule regular_left(const Algebra& b) {
  // B as a (B, Z)-bimodule
  Algebra z = fixtures::integers();
  int n = b.n();
  IntMatrix ract(n, n);
  for (int j = 0; j < n; ++j) ract.at(j, j * 1 + 0) = 1;
  return Bimodule::make(b, z, b.group, b.mult.m, std::move(ract), b.name + " as left module");
}

Bimodule regular_right(const Algebra& b) {
  // B as a (Z, B)-bimodule
  Algebra z = fixtures::integers();
  int n = b.n();
  IntMatrix lact(n, n);
  for (int j = 0; j < n; ++j) lact.at(j, 0 * n + j) = 1;
  return Bimodule::make(z, b, b.group, std::move(lact), b.mult.m, b.name + " as right module");
}

Bimodule outer_bimodule(const Algebra& a, const Algebra& b) {
  // A (x) B with A acting on the first factor and B on the second
  int na = a.n(), nb = b.n();
  FGAbGroup g = tensor_all({a.group, b.group});
  IntMatrix lact = chain_apply({na, na, nb}, 0, 2, a.mult.m);
  IntMatrix ract = chain_apply({na, nb, nb}, 1, 2, b.mult.m);
  return Bimodule::make(a, b, std::move(g), std::move(lact), std::move(ract), a.name + "(x)" + b.name);
}

BicyclicInstance random_bicyclic_instance(Rng& r) {
  long kind = r.draw(0, 2);
  if (kind == 0) {
    // both sides one transported algebra, unit coefficients with independent
    // module-side basis changes
    Transported t = random_transport(r, base_algebra(r.draw(0, 7)));
    Bimodule u = unit_bimodule(t.a);
    IntMatrix e = IntMatrix::identity(t.a.n());
    Bimodule m = transport(u, t.a, e, t.a, e, random_unimodular(r, u.n()), "M");
    Bimodule n = transport(u, t.a, e, t.a, e, random_unimodular(r, u.n()), "N");
    return {t.a, t.a, std::move(m), std::move(n), "units over " + t.a.name};
  }
  if (kind == 1) {
    // A = Z, B random: M = B with integer scaling on the left, N the mirror
    BaseAlgebra base = base_algebra(r.draw(1, 7));
    IntMatrix w = random_unimodular(r, base.a.n());
    Algebra b2 = transport(base.a, w, base.a.name + "'");
    Algebra z = fixtures::integers();
    IntMatrix e1 = IntMatrix::identity(1);
    Bimodule m = transport(regular_right(base.a), z, e1, b2, w, random_unimodular(r, base.a.n()), "M");
    Bimodule n = transport(regular_left(base.a), b2, w, z, e1, random_unimodular(r, base.a.n()), "N");
    return {z, b2, std::move(m), std::move(n), "regular modules over " + b2.name};
  }
  // twisted unit coefficient against the plain unit
  Transported t = random_transport(r, base_algebra(r.draw(4, 7)));
  Bimodule m = twist_left(unit_bimodule(t.a), t.aut);
  Bimodule n = unit_bimodule(t.a);
  return {t.a, t.a, std::move(m), std::move(n), "twisted unit over " + t.a.name};
}

TripleInstance random_shadow_triple(Rng& r) {
  long kind = r.draw(0, 2);
  if (kind == 0) {
    Transported t = random_transport(r, base_algebra(r.draw(0, 7)));
    Bimodule u = unit_bimodule(t.a);
    IntMatrix e = IntMatrix::identity(t.a.n());
    Bimodule m = transport(u, t.a, e, t.a, e, random_unimodular(r, u.n()), "M");
    Bimodule n = transport(u, t.a, e, t.a, e, random_unimodular(r, u.n()), "N");
    Bimodule p = transport(u, t.a, e, t.a, e, random_unimodular(r, u.n()), "P");
    return {std::move(m), std::move(n), std::move(p), "units over " + t.a.name};
  }
  if (kind == 1) {
    // row / column modules around a matrix algebra, closed by the unit
    BaseAlgebra base = base_algebra(r.draw(0, 3));
    Bimodule m = row_bimodule(base.a, 2);
    Bimodule n = column_bimodule(base.a, 2);
    Bimodule p = unit_bimodule(base.a);
    return {std::move(m), std::move(n), std::move(p), "rows/columns over " + base.a.name};
  }
  // three distinct algebras glued by outer tensors
  Algebra a = random_algebra(r);
  Algebra b = random_algebra(r);
  Algebra c = random_algebra(r);
  Bimodule m = outer_bimodule(a, b);
  Bimodule n = outer_bimodule(b, c);
  Bimodule p = outer_bimodule(c, a);
  return {std::move(m), std::move(n), std::move(p),
          "outer tensors over " + a.name + ", " + b.name + ", " + c.name};
}

BarInstance random_bar_instance(Rng& r) {
  BaseAlgebra base = base_algebra(r.draw(0, 7));
  IntMatrix w = random_unimodular(r, base.a.n());
  Algebra b2 = transport(base.a, w, base.a.name + "'");
  Algebra z = fixtures::integers();
  IntMatrix e1 = IntMatrix::identity(1);
  Bimodule m0 = regular_right(base.a);
  Bimodule n0 = regular_left(base.a);
  if (r.coin()) m0 = twist_right(m0, base.aut);
  Bimodule m = transport(m0, z, e1, b2, w, random_unimodular(r, base.a.n()), "M");
  Bimodule n = transport(n0, b2, w, z, e1, random_unimodular(r, base.a.n()), "N");
  return {b2, std::move(m), std::move(n), "regular pair over " + b2.name};
}

CoeffInstance random_coeff_instance(Rng& r) {
  Transported t = random_transport(r, base_algebra(r.draw(0, 7)));
  Bimodule u = unit_bimodule(t.a);
  if (r.coin()) {
    Bimodule m = twist_left(u, t.aut);
    return {t.a, std::move(m), "twisted unit over " + t.a.name};
  }
  IntMatrix e = IntMatrix::identity(t.a.n());
  Bimodule m = transport(u, t.a, e, t.a, e, random_unimodular(r, u.n()), "M");
  return {t.a, std::move(m), "unit over " + t.a.name};
}

}  // namespace gen
}  // namespace hhx
