#pragma once

#include <string>

#include "hhx/algebra.hpp"
#include "hhx/hochschild.hpp"

namespace hhx {

// Algebra equipped with a distinguished automorphism. make() verifies that
// phi is multiplicative, unital, and invertible over the integers.
struct TwistedAlgebra {
  Algebra a;
  AbHom phi;

  static TwistedAlgebra make(Algebra a, AbHom phi);
  static TwistedAlgebra untwisted(Algebra a);
  int n() const { return a.n(); }
};

// Bimodule between twisted algebras: (M, γ) with γ an additive automorphism
// satisfying γ(a·m) = φ(a)·γ(m) and γ(m·b) = γ(m)·ψ(b). Equivalently γ is an
// isomorphism M^{ψ⁻¹} ≅ ^φM; both squares are verified on generators.
struct TwistedBimodule {
  Bimodule m;
  AbHom gamma;

  static TwistedBimodule make(const TwistedAlgebra& left, const TwistedAlgebra& right, Bimodule m, AbHom gamma);
  int n() const { return m.n(); }
};

// (U_A, φ): the unit coefficients of the twisted theory.
TwistedBimodule twisted_unit(const TwistedAlgebra& ta);

// Automorphism-twisted Hochschild homology, computed as the ordinary theory
// with the left action precomposed by φ. The coefficient must live over
// (A, A); omitting it uses the unit coefficients above.
HomologyReport hh_twisted(const TwistedAlgebra& ta, const TwistedBimodule& tm, int max_degree,
                          bool normalized = true);
HomologyReport hh_twisted(const TwistedAlgebra& ta, int max_degree, bool normalized = true);

// Degree-zero closed form M / span{φ(a)·m − m·a}, on the generators of M.
QuotObject hh0_twisted(const TwistedAlgebra& ta, const TwistedBimodule& tm);
QuotObject hh0_twisted(const TwistedAlgebra& ta);

// Degree-zero rotation [m ⊗ n] ↦ [γ_N(n) ⊗ m] from the twisted degree-0
// group of M⊙N over (A, φ) to that of N⊙M over (B, ψ). Well-definedness on
// the quotients is machine-checked at construction.
AbHom twisted_swap0(const TwistedAlgebra& ta, const TwistedAlgebra& tb, const TwistedBimodule& tm,
                    const TwistedBimodule& tn);

// Graded comparison of the twisted cyclic theories of M⊙N and N⊙M through a
// chain of three levelwise isomorphisms of bicomplexes: the block rotation,
// the automorphism ladder moving the twist across the outer tensor factors,
// and the coefficient intertwiner γ_N. Every square is checked up to
// bidegree (T, T) and failures name the step, the face index, and the
// bidegree; diagonal homology is compared through degree T−1.
SwapReport twisted_cyclic_iso_check(const TwistedAlgebra& ta, const TwistedAlgebra& tb, const TwistedBimodule& tm,
                                    const TwistedBimodule& tn, int T);

// Dual pair whose two legs carry compatible twists.
struct TwistedDualPair {
  TwistedAlgebra a, b;
  TwistedBimodule m;  // (A, B)
  TwistedBimodule n;  // (B, A)
  BimoduleHom coeval, eval;
};

// The (rows, columns) pair for the r×r matrix algebra over A, with the twist
// applied entrywise on both legs.
TwistedDualPair matrix_twisted_pair(const TwistedAlgebra& ta, int r);

// Degree-zero trace of the identity 2-cell through the twisted rotation:
// HH^φ_0(A) → HH^ψ_0(B).
AbHom twisted_euler_characteristic(const TwistedDualPair& d);

struct TwistedMoritaReport {
  CheckReport checks;
  HomologyReport left, right;
  AbHom chi;
  bool homology_match = false;
  bool ok() const { return checks.ok && homology_match; }
};

// Twisted invariance of HH^φ(A; Q) under the dual pair: the left side is the
// twisted theory of Q, the right side the twisted theory of B with the
// transported coefficient N⊙Q⊙M, computed on the diagonal of the
// three-directional cyclic object when it fits in the resource ceiling and
// on the certified collapsed composite otherwise (both when both fit, with
// the two answers cross-checked). Also verifies eval/coeval intertwine the
// twists and that the degree-zero comparison map is an isomorphism.
TwistedMoritaReport twisted_morita_check(const TwistedDualPair& d, const TwistedBimodule& q);

}  // namespace hhx
