#pragma once
#include "hhx/algebra.hpp"

namespace hhx {
namespace fixtures {

// Small named algebras used throughout the test and CLI catalogues.
Algebra integers();                 // Z, one generator
Algebra cyclic_ring(const Int& m);  // Z/m as a ring
Algebra dual_numbers();             // Z[x]/(x^2), generators 1, x
Algebra group_ring_c2();            // Z[t]/(t^2-1), generators 1, t
Algebra split_pair();               // Z x Z, orthogonal idempotents e1, e2
Algebra f3xf3();                    // F_3 x F_3, orthogonal idempotents

// Automorphisms of the above.
AbHom c2_sign();                       // t -> -t on group_ring_c2
AbHom dual_sign();                     // x -> -x on dual_numbers
AbHom pair_swap(const Algebra& a);     // e1 <-> e2 on split_pair / f3xf3

// Named algebra lookup for the CLI: integers, dual-numbers, group-ring-c2,
// split-pair, f3xf3, mod-<m>, matrix-<r>-<base>. Throws on unknown names.
Algebra by_name(const std::string& name);

}  // namespace fixtures
}  // namespace hhx
