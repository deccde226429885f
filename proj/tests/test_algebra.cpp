#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <hhx/algebra.hpp>
#include <hhx/fixtures.hpp>
#include <hhx/generate.hpp>

#include "testutil.hpp"

using namespace hhx;

static Element gen_elem(const FGAbGroup& g, int i) { return Element::unit(g, i); }

// (Z,Z)-bimodule on a cyclic group, both actions by integer scaling
static Bimodule cyclic_over_z(const Int& m, const std::string& name) {
  Algebra z = fixtures::integers();
  FGAbGroup g = FGAbGroup::cyclic(m);
  return Bimodule::make(z, z, g, IntMatrix::identity(1), IntMatrix::identity(1), name);
}

TEST_CASE("fixture algebras satisfy their defining relations") {
  Algebra d = fixtures::dual_numbers();
  CHECK(d.group.equal(d.mult_entry(1, 1).coords, Element::zero(d.group).coords));  // x*x = 0
  Algebra c = fixtures::group_ring_c2();
  CHECK(c.elem_equal(c.mult_entry(1, 1), c.unit));  // t*t = 1
  Algebra s = fixtures::f3xf3();
  CHECK(s.elem_equal(s.mult_entry(0, 1), Element::zero(s.group)));  // e1*e2 = 0
  CHECK(s.elem_equal(s.mult_entry(0, 0), gen_elem(s.group, 0)));
  CHECK(s.group.equal(gen_elem(s.group, 0).scaled(3).coords, Element::zero(s.group).coords));
  CHECK(s.elem_equal(s.mul(s.unit, gen_elem(s.group, 1)), gen_elem(s.group, 1)));
}

TEST_CASE("construction rejects a non-associative table") {
  // e is a unit; a*a = b, a*b = a, b*a = b, b*b = e gives (a*a)*b != a*(a*b)
  IntMatrix t(3, 9);
  auto set = [&](int i, int j, int u) { t.at(u, i * 3 + j) = 1; };
  for (int k = 0; k < 3; ++k) {
    set(0, k, k);
    set(k, 0, k);
  }
  set(1, 1, 2);
  set(1, 2, 1);
  set(2, 1, 2);
  set(2, 2, 0);
  CHECK_THROWS_AS(Algebra::make(FGAbGroup::free_group(3), t, {Int(1), Int(0), Int(0)}, "bad"),
                  std::invalid_argument);
}

TEST_CASE("construction rejects a wrong unit") {
  IntMatrix t(1, 1);
  t.at(0, 0) = 2;  // g*g = 2g: bilinear and associative, but no unit element
  CHECK_THROWS_AS(Algebra::make(FGAbGroup::free_group(1), t, {Int(1)}, "bad"), std::invalid_argument);
}

TEST_CASE("matrix algebra multiplies like matrix units") {
  Algebra m2 = matrix_algebra(fixtures::integers(), 2);
  REQUIRE(m2.n() == 4);
  // generator i*2+j is E_{ij}
  auto e = [&](int i, int j) { return gen_elem(m2.group, i * 2 + j); };
  CHECK(m2.elem_equal(m2.mul(e(0, 0), e(0, 1)), e(0, 1)));                 // E11 E12 = E12
  CHECK(m2.elem_equal(m2.mul(e(0, 1), e(0, 0)), Element::zero(m2.group)));  // E12 E11 = 0
  CHECK(m2.elem_equal(m2.mul(e(0, 1), e(1, 0)), e(0, 0)));                 // E12 E21 = E11
  CHECK(m2.elem_equal(m2.mul(e(1, 0), e(0, 1)), e(1, 1)));                 // E21 E12 = E22
  CHECK(m2.elem_equal(m2.unit, e(0, 0).add(e(1, 1))));
  // unit acts as identity on a generic element
  Element x = e(0, 1).add(e(1, 1).scaled(Int(3)));
  CHECK(m2.elem_equal(m2.mul(m2.unit, x), x));
}

TEST_CASE("tensor over the integers matches arithmetic") {
  Bimodule m2 = cyclic_over_z(Int(2), "Z/2");
  Bimodule m3 = cyclic_over_z(Int(3), "Z/3");
  CHECK(tensor_over(m2, m3).group.is_trivial());
  Bimodule m12 = cyclic_over_z(Int(12), "Z/12");
  Bimodule m18 = cyclic_over_z(Int(18), "Z/18");
  CHECK(tensor_over(m12, m18).group.canonical_string() == "Z/6");
}

TEST_CASE("row tensor column collapses to the base; column tensor row to the matrix algebra") {
  Algebra a = fixtures::integers();
  Bimodule row = row_bimodule(a, 2);
  Bimodule col = column_bimodule(a, 2);
  Bimodule rc = tensor_over(row, col);  // over M_2(Z), result an (A,A)-bimodule
  CHECK(rc.group.canonical_string() == "Z");
  Bimodule cr = tensor_over(col, row);  // over Z, result an (M_2, M_2)-bimodule
  CHECK(cr.group.canonical_string() == "Z^4");

  Algebra c2 = fixtures::group_ring_c2();
  Bimodule row2 = row_bimodule(c2, 3);
  Bimodule col2 = column_bimodule(c2, 3);
  CHECK(tensor_over(row2, col2).group.canonical_string() == c2.group.canonical_string());
  CHECK(tensor_over(col2, row2).group.canonical_string() == "Z^18");
}

TEST_CASE("bar construction of the base ring resolves it") {
  Algebra z = fixtures::integers();
  Bimodule m = gen::regular_right(z);
  Bimodule n = gen::regular_left(z);
  SimplicialAb bar = bar_resolution(m, z, n, 3);
  HomologyReport rep = bar.homology(2, false);
  CHECK(rep.groups[0].canonical_string() == "Z");
  CHECK(rep.groups[1].is_trivial());
  CHECK(rep.groups[2].is_trivial());
}

TEST_CASE("degree zero of the bar construction is the balanced tensor product") {
  // fixed instance: rows and columns over the 2x2 matrix algebra
  Algebra a = fixtures::integers();
  Algebra m2 = matrix_algebra(a, 2);
  Bimodule row = row_bimodule(a, 2);
  Bimodule col = column_bimodule(a, 2);
  SimplicialAb bar = bar_resolution(row, m2, col, 2);
  CHECK(same_canonical(bar.homology(1, false).groups[0], tensor_over(row, col).group));

  // seeded suite
  gen::Rng rng(20260815);
  for (int i = 0; i < 20; ++i) {
    gen::BarInstance inst = gen::random_bar_instance(rng);
    SimplicialAb b = bar_resolution(inst.m, inst.b, inst.n, 2);
    FGAbGroup h0 = b.homology(1, false).groups[0];
    FGAbGroup t = tensor_over(inst.m, inst.n).group;
    INFO(inst.name, ": H_0 = ", h0.canonical_string(), " tensor = ", t.canonical_string());
    CHECK(same_canonical(h0, t));
  }
}

TEST_CASE("twisting is functorial in the automorphism") {
  Algebra c2 = fixtures::group_ring_c2();
  AbHom phi = fixtures::c2_sign();
  Bimodule u = unit_bimodule(c2);
  Bimodule tw = twist_left(u, phi);
  // t acts on the twisted side as -t acts on the plain side
  Element t = gen_elem(c2.group, 1);
  Element x = gen_elem(tw.group, 0).add(gen_elem(tw.group, 1));
  CHECK(c2.group.equal(tw.act_left(t, x).coords, u.act_left(Element(phi.apply(t.coords)), x).coords));
  // twisting twice by an involution restores the action
  Bimodule twtw = twist_left(tw, phi);
  CHECK(twtw.laction.equal(u.laction));
  CHECK(twist_left(u, AbHom::identity(c2.group)).laction.equal(u.laction));
  // same on the right
  Bimodule rtw = twist_right(u, phi);
  CHECK(twist_right(rtw, phi).raction.equal(u.raction));
}

TEST_CASE("bimodule map construction rejects non-equivariant matrices") {
  Algebra c2 = fixtures::group_ring_c2();
  Bimodule u = unit_bimodule(c2);
  IntMatrix bad = IntMatrix::identity(2);
  bad.at(1, 1) = 0;  // kills t but fixes 1: not A-linear
  CHECK_THROWS_AS(BimoduleHom::make(u, u, bad), std::invalid_argument);
  CHECK_NOTHROW(BimoduleHom::make(u, u, IntMatrix::identity(2)));
}

TEST_CASE("algebra map recognition") {
  Algebra c2 = fixtures::group_ring_c2();
  CHECK(is_algebra_map(c2, c2, fixtures::c2_sign().m));
  IntMatrix notmap = IntMatrix::identity(2);
  notmap.at(1, 1) = 2;  // t -> 2t fails multiplicativity
  CHECK_FALSE(is_algebra_map(c2, c2, notmap));
  // projection ZxZ -> Z onto the first factor is a (non-invertible) algebra
  // map; the fold map e1,e2 -> 1 is not, since e1*e2 = 0 while 1*1 = 1
  Algebra s = fixtures::split_pair();
  Algebra z = fixtures::integers();
  IntMatrix proj(1, 2);
  proj.at(0, 0) = 1;
  CHECK(is_algebra_map(s, z, proj));
  IntMatrix fold(1, 2);
  fold.at(0, 0) = 1;
  fold.at(0, 1) = 1;
  CHECK_FALSE(is_algebra_map(s, z, fold));
}

TEST_CASE("matrix morita pairs pass the duality and invertibility checks") {
  std::vector<Algebra> bases = {fixtures::integers(), fixtures::cyclic_ring(Int(2)),
                                fixtures::cyclic_ring(Int(4)), fixtures::group_ring_c2()};
  for (const Algebra& a : bases)
    for (int r = 1; r <= 3; ++r) {
      DualPairData d = matrix_morita_pair(a, r);
      CheckReport rep = check_morita(d);
      INFO(a.name, " r=", r, ": ", rep.detail);
      CHECK(rep.ok);
    }
}

TEST_CASE("doubling the evaluation breaks the triangle identities") {
  DualPairData d = matrix_morita_pair(fixtures::integers(), 2);
  d.eval = BimoduleHom::make(d.eval.src, d.eval.dst, d.eval.m.scaled(Int(2)));
  CheckReport rep = check_dual_pair(d);
  CHECK_FALSE(rep.ok);
  INFO(rep.detail);
  CHECK(rep.detail.find("triangle") != std::string::npos);
}

TEST_CASE("associators and unitors are isomorphisms with inverse unitors") {
  gen::Rng rng(42);
  for (int i = 0; i < 6; ++i) {
    gen::TripleInstance t = gen::random_shadow_triple(rng);
    BimoduleHom assoc = associator(t.m, t.n, t.p);
    CHECK(is_isomorphism(assoc.as_ab()));
    BimoduleHom lu = left_unitor(t.m), lui = left_unitor_inv(t.m);
    BimoduleHom ru = right_unitor(t.m), rui = right_unitor_inv(t.m);
    CHECK(lu.compose(lui).equal(BimoduleHom::identity(t.m)));
    CHECK(ru.compose(rui).equal(BimoduleHom::identity(t.m)));
    CHECK(is_isomorphism(lu.as_ab()));
    CHECK(is_isomorphism(ru.as_ab()));
  }
}

TEST_CASE("free summand certificates verify for rows, columns, and units") {
  Algebra a = fixtures::group_ring_c2();
  Bimodule u = unit_bimodule(a);
  CHECK(check_left_summand(u, free_relabel_cert(u, 1)).ok);
  CHECK(check_right_summand(u, free_relabel_cert(u, 1)).ok);
  Bimodule row = row_bimodule(a, 2);   // free rank 2 as a left A-module
  Bimodule col = column_bimodule(a, 2);  // free rank 2 as a right A-module
  CHECK(check_left_summand(row, free_relabel_cert(row, 2)).ok);
  CHECK(check_right_summand(col, free_relabel_cert(col, 2)).ok);
  // wrong rank is rejected
  CHECK_FALSE(check_left_summand(row, free_relabel_cert(row, 3)).ok);
}

TEST_CASE("transported algebras keep their canonical data") {
  gen::Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    Algebra a = gen::random_algebra(rng);
    Bimodule u = unit_bimodule(a);
    CHECK(tensor_over(u, u).group.canonical_string() == a.group.canonical_string());
  }
}
