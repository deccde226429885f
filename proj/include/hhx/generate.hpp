#pragma once
#include <cstdint>
#include <random>

#include "hhx/algebra.hpp"

namespace hhx {
namespace gen {

// Deterministic seeded source. mt19937_64 output is fixed by the standard,
// and draw() reduces it with rejection sampling, so identical seeds give
// identical instances on every platform.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  long draw(long lo, long hi);  // uniform inclusive
  bool coin() { return draw(0, 1) == 1; }
};

// Product of elementary row operations on the identity; |coeff| <= amp.
IntMatrix random_unimodular(Rng& r, int n, int steps = 8, long amp = 2);

// Integer inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& w);

// Isomorphic copy of a along the basis change w: relations become w*rels,
// the table and unit are conjugated. Axioms re-verified by construction.
Algebra transport(const Algebra& a, const IntMatrix& w, const std::string& name);

// Isomorphic copy of m along v, over transported algebras a2 = transport(a, wa)
// and b2 = transport(b, wb).
Bimodule transport(const Bimodule& m, const Algebra& a2, const IntMatrix& wa, const Algebra& b2,
                   const IntMatrix& wb, const IntMatrix& v, const std::string& name);

// Automorphism conjugated along the same basis change.
AbHom transport_hom(const AbHom& f, const FGAbGroup& g2, const IntMatrix& w);

// Rank <= 2 algebra drawn from a catalogue and transported along a random
// basis change (so relation matrices are usually not diagonal).
Algebra random_algebra(Rng& r);

// Same catalogue, keeping the transported automorphism (the sign/swap
// families carry a nontrivial one, the rest the identity).
struct TwistedAlgebraInstance {
  Algebra a;
  AbHom phi;
  std::string name;
};
TwistedAlgebraInstance random_twisted_algebra(Rng& r);

// B as a (B, Z)-bimodule / as a (Z, B)-bimodule.
Bimodule regular_left(const Algebra& b);
Bimodule regular_right(const Algebra& b);
// A (x) B as an (A, B)-bimodule, each side acting on its own factor.
Bimodule outer_bimodule(const Algebra& a, const Algebra& b);

// Data for the bicyclic rotation check: M an (A,B)-, N a (B,A)-bimodule.
struct BicyclicInstance {
  Algebra a, b;
  Bimodule m, n;
  std::string name;
};
BicyclicInstance random_bicyclic_instance(Rng& r);

// Composable triple M: (A,B), N: (B,C), P: (C,A) for the coherence checks.
struct TripleInstance {
  Bimodule m, n, p;
  std::string name;
};
TripleInstance random_shadow_triple(Rng& r);

// M right-B, N left-B (encoded over Z on the outside) for bar/tensor tests.
struct BarInstance {
  Algebra b;
  Bimodule m, n;
  std::string name;
};
BarInstance random_bar_instance(Rng& r);

// (A,A)-bimodule over a random algebra, for homology property suites.
struct CoeffInstance {
  Algebra a;
  Bimodule m;
  std::string name;
};
CoeffInstance random_coeff_instance(Rng& r);

}  // namespace gen
}  // namespace hhx
