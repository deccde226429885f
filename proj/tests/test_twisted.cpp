#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <hhx/complex.hpp>
#include <hhx/fixtures.hpp>
#include <hhx/generate.hpp>
#include <hhx/twisted.hpp>

#include <algorithm>
#include <stdexcept>

#include "testutil.hpp"

using namespace hhx;

namespace {

IntMatrix mat(int r, int c, std::initializer_list<long> vals) {
  IntMatrix m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Int(*it++);
  return m;
}

std::vector<Int> vec(std::initializer_list<long> vals) {
  std::vector<Int> v;
  for (long x : vals) v.emplace_back(x);
  return v;
}

TwistedAlgebra sign_ring() { return TwistedAlgebra::make(fixtures::group_ring_c2(), fixtures::c2_sign()); }

// the identity dual pair (U_A, U_A) with the unitors as structure maps
TwistedDualPair identity_pair(const TwistedAlgebra& ta, const TwistedBimodule& tn) {
  Bimodule u = unit_bimodule(ta.a);
  return TwistedDualPair{ta, ta, twisted_unit(ta), tn, right_unitor_inv(u), left_unitor(u)};
}

bool item_state(const CheckReport& r, const std::string& name) {
  for (const auto& it : r.items)
    if (it.first == name) return it.second;
  FAIL("missing check item: ", name);
  return false;
}

}  // namespace

TEST_CASE("twisted algebras require a ring automorphism") {
  Algebra zc2 = fixtures::group_ring_c2();
  CHECK_NOTHROW(TwistedAlgebra::make(zc2, fixtures::c2_sign()));
  CHECK_NOTHROW(TwistedAlgebra::untwisted(zc2));

  // t ↦ 1 + t is additive and unital but not multiplicative
  AbHom shear = AbHom::make(zc2.group, zc2.group, mat(2, 2, {1, 1, 0, 1}));
  CHECK_THROWS_AS(TwistedAlgebra::make(zc2, shear), std::invalid_argument);

  // x ↦ 0 on the dual numbers is multiplicative and unital but not invertible
  Algebra dn = fixtures::dual_numbers();
  AbHom crush = AbHom::make(dn.group, dn.group, mat(2, 2, {1, 0, 0, 0}));
  CHECK_THROWS_AS(TwistedAlgebra::make(dn, crush), std::invalid_argument);
}

TEST_CASE("twisted bimodules require the intertwiner squares") {
  TwistedAlgebra ta = sign_ring();
  Bimodule u = unit_bimodule(ta.a);

  // the identity fails against a nontrivial twist: id(t·1) ≠ φ(t)·1
  CHECK_THROWS_AS(TwistedBimodule::make(ta, ta, u, AbHom::identity(u.group)), std::invalid_argument);
  // a non-invertible candidate is rejected before the squares
  CHECK_THROWS_AS(TwistedBimodule::make(ta, ta, u, AbHom::zero_hom(u.group, u.group)), std::invalid_argument);
  // a bimodule over the wrong algebras is rejected
  Bimodule uz = unit_bimodule(fixtures::integers());
  CHECK_THROWS_AS(TwistedBimodule::make(ta, ta, uz, AbHom::identity(uz.group)), std::invalid_argument);

  // the twist itself works, and so does its negative
  CHECK_NOTHROW(TwistedBimodule::make(ta, ta, u, ta.phi));
  CHECK_NOTHROW(TwistedBimodule::make(ta, ta, u, ta.phi.negated()));
}

TEST_CASE("twisting by the identity recovers the plain theory") {
  gen::Rng rng(20260815);
  for (int trial = 0; trial < 6; ++trial) {
    gen::CoeffInstance inst = gen::random_coeff_instance(rng);
    INFO("trial ", trial, ": ", inst.name);
    TwistedAlgebra ta = TwistedAlgebra::untwisted(inst.a);
    TwistedBimodule tm = TwistedBimodule::make(ta, ta, inst.m, AbHom::identity(inst.m.group));
    CHECK(hh_twisted(ta, tm, 2).equal_canonical(hh(inst.a, inst.m, 2, true)));
  }
  TwistedAlgebra ta = TwistedAlgebra::untwisted(fixtures::group_ring_c2());
  CHECK(hh_twisted(ta, 2).equal_canonical(hh(ta.a, 2, true)));
}

TEST_CASE("sign twist on the involution ring is two-periodic") {
  TwistedAlgebra ta = sign_ring();
  HomologyReport rep = hh_twisted(ta, 3);
  REQUIRE(rep.groups.size() == 4);
  CHECK(rep.groups[0].canonical_string() == "Z/2 + Z/2");
  CHECK(rep.groups[1].canonical_string() == "0");
  CHECK(rep.groups[2].canonical_string() == "Z/2 + Z/2");
  CHECK(rep.groups[3].canonical_string() == "0");

  // independent small model: conjugation by the twisted generator acts as
  // −1 on the whole ring, giving the periodic complex with differentials
  // −2·id and 0
  FGAbGroup g = FGAbGroup::free_group(2);
  IntMatrix m2 = mat(2, 2, {-2, 0, 0, -2});
  IntMatrix z0 = mat(2, 2, {0, 0, 0, 0});
  ChainComplex per = ChainComplex::make({g, g, g, g, g}, {AbHom::make(g, g, m2), AbHom::make(g, g, z0),
                                                          AbHom::make(g, g, m2), AbHom::make(g, g, z0)});
  for (int q = 0; q <= 3; ++q) {
    INFO("degree ", q);
    CHECK(same_canonical(per.homology_group(q), rep.groups[q]));
  }

  CHECK(hh_twisted(ta, twisted_unit(ta), 3, false).equal_canonical(rep));
}

TEST_CASE("twisted degree zero kills twisted commutators") {
  TwistedAlgebra ta = sign_ring();
  QuotObject h0 = hh0_twisted(ta);
  CHECK(h0.group.canonical_string() == "Z/2 + Z/2");
  // φ(t)·1 − 1·t = −2t and φ(t)·t − t·t = −2 span the relators
  CHECK(h0.group.is_zero(h0.projection.apply(vec({2, 0}))));
  CHECK(h0.group.is_zero(h0.projection.apply(vec({0, 2}))));
  CHECK(!h0.group.is_zero(h0.projection.apply(vec({0, 1}))));
  CHECK(h0.group.element_order(h0.projection.apply(vec({0, 1}))) == 2);

  // swapping the factors of a product ring identifies the two slots and the
  // twisted relators then kill everything
  Algebra f9 = fixtures::f3xf3();
  CHECK(hh0_twisted(TwistedAlgebra::make(f9, fixtures::pair_swap(f9))).group.is_trivial());
  Algebra zz = fixtures::split_pair();
  CHECK(hh0_twisted(TwistedAlgebra::make(zz, fixtures::pair_swap(zz))).group.is_trivial());
}

TEST_CASE("trivially twisted rotation agrees with the plain comparison") {
  gen::Rng rng(97531);
  for (int trial = 0; trial < 3; ++trial) {
    gen::BicyclicInstance inst = gen::random_bicyclic_instance(rng);
    INFO("trial ", trial, ": ", inst.name);
    TwistedAlgebra ta = TwistedAlgebra::untwisted(inst.a);
    TwistedAlgebra tb = TwistedAlgebra::untwisted(inst.b);
    TwistedBimodule tm = TwistedBimodule::make(ta, tb, inst.m, AbHom::identity(inst.m.group));
    TwistedBimodule tn = TwistedBimodule::make(tb, ta, inst.n, AbHom::identity(inst.n.group));
    SwapReport tw = twisted_cyclic_iso_check(ta, tb, tm, tn, 2);
    SwapReport plain = bicyclic_swap_check(inst.a, inst.b, inst.m, inst.n, 2);
    CHECK(tw.ok());
    CHECK(tw.ok() == plain.ok());
    CHECK(tw.left.equal_canonical(plain.left));
    CHECK(tw.right.equal_canonical(plain.right));
  }
}

TEST_CASE("three-step comparison transports the sign twist") {
  TwistedAlgebra ta = sign_ring();
  TwistedBimodule tu = twisted_unit(ta);

  SwapReport rep = twisted_cyclic_iso_check(ta, ta, tu, tu, 3);
  CHECK(rep.ok());
  CHECK(rep.homology_match);
  // the diagonal recovers the twisted homology of the unit coefficients
  CHECK(rep.left.equal_canonical(hh_twisted(ta, 2)));

  // negating the coefficient intertwiner still satisfies every square
  TwistedBimodule neg = TwistedBimodule::make(ta, ta, unit_bimodule(ta.a), ta.phi.negated());
  CHECK(twisted_cyclic_iso_check(ta, ta, tu, neg, 2).ok());

  CHECK_THROWS_AS(twisted_cyclic_iso_check(ta, ta, tu, tu, 0), std::invalid_argument);
  TwistedAlgebra tz = TwistedAlgebra::untwisted(fixtures::integers());
  CHECK_THROWS_AS(twisted_cyclic_iso_check(ta, tz, tu, tu, 2), std::invalid_argument);
}

TEST_CASE("three-step comparison passes on transported twists") {
  gen::Rng rng(112358);
  for (int trial = 0; trial < 5; ++trial) {
    gen::TwistedAlgebraInstance inst = gen::random_twisted_algebra(rng);
    INFO("trial ", trial, ": ", inst.name);
    TwistedAlgebra ta = TwistedAlgebra::make(inst.a, inst.phi);
    TwistedBimodule tu = twisted_unit(ta);
    SwapReport rep = twisted_cyclic_iso_check(ta, ta, tu, tu, 2);
    CHECK(rep.ok());
  }
}

TEST_CASE("twisted trace of the identity cell") {
  TwistedAlgebra ta = sign_ring();

  // around the identity pair the trace is the identity map
  TwistedDualPair idp = identity_pair(ta, twisted_unit(ta));
  AbHom chi = twisted_euler_characteristic(idp);
  CHECK(chi.equal(AbHom::identity(chi.src)));

  // around the matrix pair it is an isomorphism between the two twisted
  // degree-zero groups
  TwistedDualPair mp = matrix_twisted_pair(ta, 2);
  AbHom mchi = twisted_euler_characteristic(mp);
  CHECK(mchi.src.canonical_string() == "Z/2 + Z/2");
  CHECK(mchi.dst.canonical_string() == "Z/2 + Z/2");
  CHECK(is_isomorphism(mchi));
  CHECK(!mchi.is_zero_hom());

  // a failed triangle identity is rejected before any trace is formed
  Bimodule u = unit_bimodule(ta.a);
  BimoduleHom bad_eval =
      BimoduleHom::make(tensor_over(u, u), u, mat(2, 4, {0, 0, 0, 0, 0, 0, 0, 0}));
  TwistedDualPair broken{ta, ta, twisted_unit(ta), twisted_unit(ta), right_unitor_inv(u), bad_eval};
  CHECK_THROWS_AS(twisted_euler_characteristic(broken), std::invalid_argument);
}

TEST_CASE("twisted invariance holds across the identity pair") {
  TwistedAlgebra ta = sign_ring();
  TwistedDualPair idp = identity_pair(ta, twisted_unit(ta));
  TwistedMoritaReport rep = twisted_morita_check(idp, twisted_unit(ta));
  CHECK(rep.ok());
  CHECK(rep.homology_match);
  CHECK(rep.left.equal_canonical(rep.right));
  // small enough that the derived diagonal is computed and cross-checked
  // against the collapsed composite
  CHECK(item_state(rep.checks, "collapsed composite agrees with the diagonal model"));
  CHECK(item_state(rep.checks, "legs are summands of free one-sided modules"));
}

TEST_CASE("twisted invariance holds across the matrix pair") {
  TwistedAlgebra ta = sign_ring();
  TwistedDualPair mp = matrix_twisted_pair(ta, 2);
  TwistedMoritaReport rep = twisted_morita_check(mp, twisted_unit(ta));
  CHECK(rep.ok());
  CHECK(rep.homology_match);
  CHECK(rep.left.equal_canonical(hh_twisted(ta, 2)));
  CHECK(item_state(rep.checks, "underlying dual pair is a Morita equivalence"));
  CHECK(item_state(rep.checks, "coevaluation intertwines the twists"));
  CHECK(item_state(rep.checks, "evaluation intertwines the twists"));
  CHECK(item_state(rep.checks, "degree-zero comparison map is an isomorphism"));
  CHECK(is_isomorphism(rep.chi));
}

TEST_CASE("non-equivariant structure maps are reported") {
  TwistedAlgebra ta = sign_ring();
  // flip the sign of one leg's intertwiner: every square still holds for
  // the leg itself, but the unit no longer equalizes the two twists
  TwistedBimodule neg = TwistedBimodule::make(ta, ta, unit_bimodule(ta.a), ta.phi.negated());
  TwistedDualPair idp = identity_pair(ta, neg);
  TwistedMoritaReport rep = twisted_morita_check(idp, twisted_unit(ta));
  CHECK(!rep.ok());
  CHECK(!item_state(rep.checks, "coevaluation intertwines the twists"));
  CHECK(!item_state(rep.checks, "evaluation intertwines the twists"));
  // the homology values themselves do not see the intertwiner
  CHECK(rep.homology_match);

  TwistedAlgebra tz = TwistedAlgebra::untwisted(fixtures::integers());
  CHECK_THROWS_AS(twisted_morita_check(idp, twisted_unit(tz)), std::invalid_argument);
}

TEST_CASE("matrix pair twists entrywise") {
  TwistedAlgebra ta = sign_ring();
  TwistedDualPair mp = matrix_twisted_pair(ta, 2);
  CHECK(mp.b.n() == 8);
  // ψ on the matrix algebra is the twist in every slot
  IntMatrix expected = IntMatrix::identity(4).kron(ta.phi.m);
  CHECK(mp.b.phi.equal(AbHom::make(mp.b.a.group, mp.b.a.group, expected)));
  // the leg intertwiner negates the twisted generator in each slot
  std::vector<Int> e_slot0_t = vec({0, 1, 0, 0});
  CHECK(mp.m.m.group.equal(mp.m.gamma.apply(e_slot0_t), vec({0, -1, 0, 0})));
}
