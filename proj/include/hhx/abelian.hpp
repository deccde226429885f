#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hhx/snf.hpp"

namespace hhx {

struct CanonicalIso;

// Finitely generated abelian group presented as Z^gens / col-span(rels).
// Immutable; copies share state. Canonical data (free rank, invariant
// factors) and the normal-form transform are computed on first use and
// cached: groups that only ever serve as hom sources (tensor chains with
// thousands of generators) never pay for diagonalization.
class FGAbGroup {
public:
  FGAbGroup();  // trivial: 0 generators
  static FGAbGroup make(int gens, IntMatrix rels);
  static FGAbGroup free_group(int n);
  static FGAbGroup cyclic(const Int& m);  // Z/m, m = 0 gives Z
  static FGAbGroup from_moduli(const std::vector<Int>& moduli);  // one gen per entry, 0 = free

  int gens() const;
  const IntMatrix& rels() const;
  bool rels_diagonal() const;                   // every relator hits a single generator
  const std::vector<Int>& gen_modulus() const;  // only valid when rels_diagonal()

  int free_rank() const;
  const std::vector<Int>& invariant_factors() const;  // all >= 2, d_i | d_{i+1}
  std::string canonical_string() const;               // e.g. "Z^2 + Z/2 + Z/4", "0" if trivial
  bool is_trivial() const;
  Int order() const;  // 0 when infinite

  std::vector<Int> normal_form(const std::vector<Int>& x) const;
  CanonicalIso canonical_iso() const;
  bool is_zero(const std::vector<Int>& x) const;
  bool equal(const std::vector<Int>& x, const std::vector<Int>& y) const;
  Int element_order(const std::vector<Int>& x) const;  // 0 when infinite

  uint64_t structural_hash() const;

private:
  struct Data;
  std::shared_ptr<const Data> d_;
  void ensure_canonical() const;  // not safe for concurrent first use
};

bool same_canonical(const FGAbGroup& a, const FGAbGroup& b);

// Element of an FGAbGroup as a coordinate vector over its generators.
// Equality is decided in the group, never coordinatewise.
struct Element {
  std::vector<Int> coords;

  Element() = default;
  explicit Element(std::vector<Int> c) : coords(std::move(c)) {}
  static Element zero(const FGAbGroup& g) { return Element(std::vector<Int>(g.gens(), Int(0))); }
  static Element unit(const FGAbGroup& g, int i);

  Element add(const Element& o) const;
  Element sub(const Element& o) const;
  Element negated() const;
  Element scaled(const Int& s) const;
};

// Homomorphism of presented groups; matrix columns are images of source
// generators. Well-definedness (relators map to zero) is checked in make().
struct AbHom {
  FGAbGroup src, dst;
  IntMatrix m;  // dst.gens x src.gens

  static AbHom make(FGAbGroup src, FGAbGroup dst, IntMatrix m);
  static AbHom make_unchecked(FGAbGroup src, FGAbGroup dst, IntMatrix m);
  static AbHom identity(const FGAbGroup& g);
  static AbHom zero_hom(const FGAbGroup& src, const FGAbGroup& dst);

  bool well_defined() const;
  AbHom compose(const AbHom& inner) const;  // this after inner
  AbHom add(const AbHom& o) const;
  AbHom sub(const AbHom& o) const;
  AbHom negated() const;
  bool is_zero_hom() const;
  bool equal(const AbHom& o) const;  // as maps on the quotient
  std::vector<Int> apply(const std::vector<Int>& x) const;
  Element apply(const Element& x) const { return Element(apply(x.coords)); }
};

// Explicit isomorphism with the canonical form Z^r ⊕ ⊕Z/d_i on the minimal
// generator count; both composites are the identity. Used to shrink wide
// cokernel presentations before they feed size-sensitive constructions.
struct CanonicalIso {
  FGAbGroup canon;
  AbHom to;    // original -> canon
  AbHom from;  // canon -> original
};

struct SubObject {
  FGAbGroup group;
  AbHom inclusion;  // group -> ambient
};
struct QuotObject {
  FGAbGroup group;
  AbHom projection;  // ambient -> group
};

// Lattice of coordinate vectors representing elements of ker(f), as a basis.
IntMatrix hom_kernel_lattice(const AbHom& f);

SubObject kernel(const AbHom& f);
SubObject image(const AbHom& f);
QuotObject cokernel(const AbHom& f);
bool is_isomorphism(const AbHom& f);
std::optional<AbHom> inverse(const AbHom& f);

FGAbGroup tensor(const FGAbGroup& g, const FGAbGroup& h);  // gens (i,j) -> i*h.gens()+j
FGAbGroup direct_sum(const FGAbGroup& g, const FGAbGroup& h);
AbHom tensor_hom(const AbHom& f, const AbHom& g);
AbHom direct_sum_hom(const AbHom& f, const AbHom& g);

// ker(d_out)/im(d_in) at the middle group, kept with its ambient data so
// maps of complexes can be pushed to homology.
struct Subquotient {
  FGAbGroup group;    // presented on the columns of `basis`
  IntMatrix basis;    // ambient.gens x s
  FGAbGroup ambient;  // the middle group

  // coordinates of an ambient vector (which must represent an element of the
  // kernel subgroup) in the subquotient presentation
  std::vector<Int> represent(const std::vector<Int>& x) const;
};

// d_out ∘ d_in must vanish on generators; diagnostic names the failing index.
Subquotient homology_at(const AbHom& d_in, const AbHom& d_out);

// Map induced on subquotients by an ambient hom u (must carry the kernel
// lattice of hx into that of hy; checked).
AbHom induced_on_subquotient(const Subquotient& hx, const Subquotient& hy, const IntMatrix& u);

}  // namespace hhx
