#pragma once
#include <optional>
#include <string>

#include "hhx/complex.hpp"

namespace hhx {

// ---- iterated tensor-product helpers ----
// Flat indexing convention everywhere: the tensor of factors F_0,...,F_k is
// presented on generator tuples (i_0,...,i_k) with flat index
// ((i_0*n_1 + i_1)*n_2 + i_2)*... — leading factor most significant.
FGAbGroup tensor_all(const std::vector<FGAbGroup>& factors);
long chain_size(const std::vector<int>& dims);
// kron(I_pre, op, I_post): op consumes `consume` adjacent factors starting at
// `pos`; consume = 0 inserts (op must be a column vector of coordinates).
IntMatrix chain_apply(const std::vector<int>& dims, int pos, int consume, const IntMatrix& op);
// permutation matrix moving the last factor to the front
IntMatrix chain_rotate_last_front(const std::vector<int>& dims);

// Unital associative multiplication on an FGAbGroup. The table is a hom
// tensor(group, group) -> group; column (i,j) is generator_i * generator_j.
// Associativity and both unit laws are verified on generators at make().
struct Algebra {
  FGAbGroup group;
  AbHom mult;
  Element unit;
  std::string name;

  static Algebra make(FGAbGroup g, IntMatrix mult_table, std::vector<Int> unit_coords,
                      std::string name = "A");
  int n() const { return group.gens(); }
  Element mul(const Element& x, const Element& y) const;
  Element mult_entry(int i, int j) const;  // generator_i * generator_j
  bool elem_equal(const Element& x, const Element& y) const { return group.equal(x.coords, y.coords); }
};

bool algebra_equal(const Algebra& a, const Algebra& b);

// (A,B)-bimodule. Left and right actions must individually be associative
// unital module structures and commute with each other; all verified on
// generators at make().
struct Bimodule {
  Algebra left_alg, right_alg;
  FGAbGroup group;
  AbHom laction;  // tensor(A.group, group) -> group
  AbHom raction;  // tensor(group, B.group) -> group
  std::string name;

  static Bimodule make(Algebra a, Algebra b, FGAbGroup m, IntMatrix laction, IntMatrix raction,
                       std::string name = "M");
  int n() const { return group.gens(); }
  Element act_left(const Element& a, const Element& m) const;
  Element act_right(const Element& m, const Element& b) const;
};

Bimodule unit_bimodule(const Algebra& a);  // A over itself on both sides

// Map of bimodules over fixed (A,B); action-equivariance checked at make().
struct BimoduleHom {
  Bimodule src, dst;
  IntMatrix m;

  static BimoduleHom make(Bimodule src, Bimodule dst, IntMatrix m);
  static BimoduleHom identity(const Bimodule& b);
  BimoduleHom compose(const BimoduleHom& inner) const;
  AbHom as_ab() const;  // forget the actions
  bool equal(const BimoduleHom& o) const;
};

Algebra matrix_algebra(const Algebra& a, int r);
// rows A^{1xr}: an (A, M_r(A))-bimodule; columns A^{rx1}: an (M_r(A), A)-bimodule
Bimodule row_bimodule(const Algebra& a, int r);
Bimodule column_bimodule(const Algebra& a, int r);

// M ⊗_B N as a cokernel presentation on generator pairs, with the outer
// (A,C)-actions. The balance relators are (m·b)⊗n − m⊗(b·n) over generators.
Bimodule tensor_over(const Bimodule& m, const Bimodule& n);
BimoduleHom tensor_over_hom(const BimoduleHom& f, const BimoduleHom& g);

// Isomorphic copy of m on the canonical coordinates of its group — iterated
// tensor_over presentations keep the full generator grid, which makes every
// later bar level pay for generators that carry nothing. The returned hom is
// the isomorphism m -> minimized.
BimoduleHom minimize_presentation(const Bimodule& m);

// Structure isos on tensor_over presentations, all returned as checked homs.
BimoduleHom associator(const Bimodule& m, const Bimodule& n, const Bimodule& p);  // (M⊙N)⊙P → M⊙(N⊙P)
BimoduleHom left_unitor(const Bimodule& m);        // U_A ⊙ M → M
BimoduleHom right_unitor(const Bimodule& m);       // M ⊙ U_B → M
BimoduleHom left_unitor_inv(const Bimodule& m);    // M → U_A ⊙ M
BimoduleHom right_unitor_inv(const Bimodule& m);   // M → M ⊙ U_B

// Two-sided bar construction Bar(M; B; N): level p = M ⊗ B^{⊗p} ⊗ N, faces
// by the actions and interior multiplications, degeneracies insert 1_B.
SimplicialAb bar_resolution(const Bimodule& m, const Algebra& b, const Bimodule& n, int trunc);

bool is_algebra_map(const Algebra& a, const Algebra& b, const IntMatrix& f);
// ^φM: left action λ∘(φ⊗id); φ must be an automorphism of the left algebra.
Bimodule twist_left(const Bimodule& m, const AbHom& phi);
// M^ψ: right action ρ∘(id⊗ψ)
Bimodule twist_right(const Bimodule& m, const AbHom& psi);

struct CheckReport {
  bool ok = true;
  std::vector<std::pair<std::string, bool>> items;
  std::string detail;
  void record(const std::string& what, bool pass) {
    items.emplace_back(what, pass);
    if (!pass) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

// Dual pair (M, N) with evaluation and coevaluation; triangle identities are
// stated with the explicit associators/unitors above.
struct DualPairData {
  Algebra a, b;
  Bimodule m;          // (A,B)
  Bimodule n;          // (B,A)
  BimoduleHom coeval;  // U_A -> M ⊙ N
  BimoduleHom eval;    // N ⊙ M -> U_B
};

CheckReport check_dual_pair(const DualPairData& d);
CheckReport check_morita(const DualPairData& d);  // dual pair + eval/coeval isomorphisms both ways

DualPairData matrix_morita_pair(const Algebra& a, int r);

// Certificate that a bimodule is a direct summand of a free one-sided module
// A^copies, with explicit inclusion/projection (one-sided equivariance and
// proj∘incl = id are checked). Used to justify replacing a derived tensor by
// the plain cokernel model.
struct SummandCert {
  int copies = 1;
  IntMatrix incl, proj;
};
CheckReport check_left_summand(const Bimodule& m, const SummandCert& c);   // over left_alg
CheckReport check_right_summand(const Bimodule& m, const SummandCert& c);  // over right_alg
SummandCert free_relabel_cert(const Bimodule& m, int copies);  // coordinates already a direct sum of copies

}  // namespace hhx
