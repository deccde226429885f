#include "hhx/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hhx {

namespace {

// invariant factors of a diagonal presentation: bubble pairwise gcd/lcm
std::vector<Int> invariants_of_moduli(std::vector<Int> d) {
  d.erase(std::remove_if(d.begin(), d.end(), [](const Int& x) { return x == 0; }), d.end());
  for (Int& x : d) x = abs(x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < d.size(); ++i)
      for (size_t j = i + 1; j < d.size(); ++j) {
        if (d[j] % d[i] == 0) continue;
        Int g = gcd(d[i], d[j]);
        Int l = d[i] / g * d[j];
        d[i] = g;
        d[j] = l;
        changed = true;
      }
  }
  std::sort(d.begin(), d.end());
  d.erase(std::remove_if(d.begin(), d.end(), [](const Int& x) { return x == 1; }), d.end());
  return d;
}

bool columns_single_hit(const IntMatrix& rels, std::vector<Int>& modulus) {
  modulus.assign(rels.rows(), Int(0));
  for (int j = 0; j < rels.cols(); ++j) {
    int hit = -1;
    for (int i = 0; i < rels.rows(); ++i) {
      if (rels.at(i, j) == 0) continue;
      if (hit >= 0) return false;
      hit = i;
    }
    if (hit >= 0) modulus[hit] = gcd(modulus[hit], rels.at(hit, j));
  }
  for (Int& m : modulus) m = abs(m);
  return true;
}

}  // namespace

struct FGAbGroup::Data {
  int n = 0;
  IntMatrix rels;
  bool diag = false;
  std::vector<Int> modulus;  // per generator, diag case only
  uint64_t hash = 0;
  // general case: filled lazily by ensure_canonical(); the Smith reduction of
  // a wide action-source presentation is far more expensive than anything the
  // group is ever asked to do
  mutable bool canon = false;
  mutable IntMatrix u, uinv;     // normal-form transform and inverse
  mutable std::vector<Int> inv;  // per u-row reduction modulus
  mutable int free_rank = 0;
  mutable std::vector<Int> factors;
};

void FGAbGroup::ensure_canonical() const {
  const Data& d = *d_;
  if (d.canon) return;
  // tracking U^{-1} through the reduction avoids inverting U afterwards; on
  // presentations left behind by chains of lattice solves U's entries dwarf
  // the input's and a second Smith pass over them does not come back
  SnfResult s = smith_normal_form(d.rels, true, true);
  d.u = std::move(s.U);
  d.uinv = std::move(s.Uinv);
  d.inv.assign(d.n, Int(0));
  for (int i = 0; i < static_cast<int>(s.diag.size()); ++i) d.inv[i] = s.diag[i];
  d.free_rank = d.n - s.rank;
  d.factors = invariants_of_moduli(d.inv);
  d.canon = true;
}

FGAbGroup::FGAbGroup() {
  auto d = std::make_shared<Data>();
  d->n = 0;
  d->rels = IntMatrix(0, 0);
  d->diag = true;
  d->canon = true;
  d->hash = 0x6a09e667f3bcc909ull;
  d_ = std::move(d);
}

int FGAbGroup::gens() const { return d_->n; }
const IntMatrix& FGAbGroup::rels() const { return d_->rels; }
bool FGAbGroup::rels_diagonal() const { return d_->diag; }
const std::vector<Int>& FGAbGroup::gen_modulus() const {
  if (!d_->diag) throw std::logic_error("gen_modulus on non-diagonal presentation");
  return d_->modulus;
}
int FGAbGroup::free_rank() const {
  ensure_canonical();
  return d_->free_rank;
}
const std::vector<Int>& FGAbGroup::invariant_factors() const {
  ensure_canonical();
  return d_->factors;
}
bool FGAbGroup::is_trivial() const { return free_rank() == 0 && invariant_factors().empty(); }

FGAbGroup FGAbGroup::make(int gens, IntMatrix rels) {
  if (rels.rows() != gens) throw std::invalid_argument("group: relator length != generator count");
  auto d = std::make_shared<Data>();
  d->n = gens;
  // keep relation matrices slim: a generating set never needs > gens columns
  if (rels.cols() > gens) rels = lattice_basis(rels);
  d->rels = std::move(rels);
  d->diag = columns_single_hit(d->rels, d->modulus);
  if (d->diag) {
    d->factors = invariants_of_moduli(d->modulus);
    int tor = 0;
    for (const Int& m : d->modulus)
      if (m != 0) ++tor;
    d->free_rank = gens - tor;
    d->canon = true;
  }
  uint64_t h = 0x9e3779b97f4a7c15ull ^ (static_cast<uint64_t>(gens) << 1);
  h ^= d->rels.structural_hash() + 0x517cc1b727220a95ull;
  d->hash = h;
  FGAbGroup g;
  g.d_ = std::move(d);
  return g;
}

FGAbGroup FGAbGroup::free_group(int n) { return make(n, IntMatrix(n, 0)); }

FGAbGroup FGAbGroup::cyclic(const Int& m) { return from_moduli({m}); }

FGAbGroup FGAbGroup::from_moduli(const std::vector<Int>& moduli) {
  int n = static_cast<int>(moduli.size());
  std::vector<std::vector<Int>> cols;
  for (int i = 0; i < n; ++i) {
    if (moduli[i] == 0) continue;
    std::vector<Int> c(n, Int(0));
    c[i] = moduli[i];
    cols.push_back(std::move(c));
  }
  return make(n, IntMatrix::from_columns(n, cols));
}

std::string FGAbGroup::canonical_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank() > 0) {
    if (free_rank() == 1)
      os << "Z";
    else
      os << "Z^" << free_rank();
    first = false;
  }
  for (const Int& f : invariant_factors()) {
    os << (first ? "" : " + ") << "Z/" << f.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Int FGAbGroup::order() const {
  if (free_rank() > 0) return 0;
  Int o = 1;
  for (const Int& f : invariant_factors()) o *= f;
  return o;
}

std::vector<Int> FGAbGroup::normal_form(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != d_->n) throw std::invalid_argument("normal_form: bad length");
  std::vector<Int> y;
  if (d_->diag) {
    y = x;
    for (int i = 0; i < d_->n; ++i)
      if (d_->modulus[i] != 0) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d_->modulus[i].get_mpz_t());
    return y;
  }
  // reduce in the coordinates where the relation lattice is diagonal, then
  // return to the presentation's own coordinates
  ensure_canonical();
  y = d_->u.apply(x);
  for (int i = 0; i < d_->n; ++i)
    if (d_->inv[i] != 0) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d_->inv[i].get_mpz_t());
  return d_->uinv.apply(y);
}

bool FGAbGroup::is_zero(const std::vector<Int>& x) const {
  std::vector<Int> y = normal_form(x);
  for (const Int& v : y)
    if (v != 0) return false;
  return true;
}

bool FGAbGroup::equal(const std::vector<Int>& x, const std::vector<Int>& y) const {
  return normal_form(x) == normal_form(y);
}

Int FGAbGroup::element_order(const std::vector<Int>& x) const {
  std::vector<Int> y;
  if (d_->diag) {
    y = normal_form(x);
  } else {
    ensure_canonical();
    y = d_->u.apply(x);  // order is read off in the diagonalizing coordinates
    for (int i = 0; i < d_->n; ++i)
      if (d_->inv[i] != 0) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d_->inv[i].get_mpz_t());
  }
  const std::vector<Int>& mods = d_->diag ? d_->modulus : d_->inv;
  Int ord = 1;
  for (int i = 0; i < d_->n; ++i) {
    if (y[i] == 0) continue;
    if (mods[i] == 0) return 0;
    Int k = mods[i] / gcd(mods[i], y[i]);
    ord = ord / gcd(ord, k) * k;
  }
  return ord;
}

CanonicalIso FGAbGroup::canonical_iso() const {
  const int n = d_->n;
  ensure_canonical();
  const std::vector<Int>& mods = d_->diag ? d_->modulus : d_->inv;
  std::vector<int> keep;  // generators with modulus 1 carry nothing
  std::vector<Int> moduli;
  for (int i = 0; i < n; ++i)
    if (mods[i] != 1) {
      keep.push_back(i);
      moduli.push_back(mods[i]);
    }
  int k = static_cast<int>(keep.size());
  IntMatrix to(k, n), from(n, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) {
      if (d_->diag) {
        if (keep[r] == c) {
          to.at(r, c) = 1;
          from.at(c, r) = 1;
        }
      } else {
        to.at(r, c) = d_->u.at(keep[r], c);
        from.at(c, r) = d_->uinv.at(c, keep[r]);
      }
    }
  CanonicalIso iso;
  iso.canon = FGAbGroup::from_moduli(moduli);
  iso.to = AbHom::make(*this, iso.canon, std::move(to));
  iso.from = AbHom::make(iso.canon, *this, std::move(from));
  return iso;
}

uint64_t FGAbGroup::structural_hash() const { return d_->hash; }

bool same_canonical(const FGAbGroup& a, const FGAbGroup& b) {
  return a.free_rank() == b.free_rank() && a.invariant_factors() == b.invariant_factors();
}

Element Element::unit(const FGAbGroup& g, int i) {
  Element e = zero(g);
  e.coords[i] = 1;
  return e;
}
Element Element::add(const Element& o) const {
  Element r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}
Element Element::sub(const Element& o) const {
  Element r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}
Element Element::negated() const {
  Element r = *this;
  for (Int& c : r.coords) c = -c;
  return r;
}
Element Element::scaled(const Int& s) const {
  Element r = *this;
  for (Int& c : r.coords) c *= s;
  return r;
}

AbHom AbHom::make(FGAbGroup src, FGAbGroup dst, IntMatrix m) {
  AbHom f = make_unchecked(std::move(src), std::move(dst), std::move(m));
  if (!f.well_defined()) throw std::invalid_argument("hom not well defined: a relator has nonzero image");
  return f;
}

AbHom AbHom::make_unchecked(FGAbGroup src, FGAbGroup dst, IntMatrix m) {
  if (m.rows() != dst.gens() || m.cols() != src.gens())
    throw std::invalid_argument("hom: matrix shape mismatch");
  return AbHom{std::move(src), std::move(dst), std::move(m)};
}

AbHom AbHom::identity(const FGAbGroup& g) {
  return make_unchecked(g, g, IntMatrix::identity(g.gens()));
}

AbHom AbHom::zero_hom(const FGAbGroup& src, const FGAbGroup& dst) {
  return make_unchecked(src, dst, IntMatrix(dst.gens(), src.gens()));
}

bool AbHom::well_defined() const {
  if (src.rels().cols() == 0) return true;
  IntMatrix img = m.mul(src.rels());
  for (int j = 0; j < img.cols(); ++j)
    if (!dst.is_zero(img.col(j))) return false;
  return true;
}

AbHom AbHom::compose(const AbHom& inner) const {
  if (inner.dst.gens() != src.gens()) throw std::invalid_argument("compose: middle mismatch");
  return make_unchecked(inner.src, dst, m.mul(inner.m));
}

AbHom AbHom::add(const AbHom& o) const { return make_unchecked(src, dst, m.add(o.m)); }
AbHom AbHom::sub(const AbHom& o) const { return make_unchecked(src, dst, m.sub(o.m)); }
AbHom AbHom::negated() const { return make_unchecked(src, dst, m.negated()); }

bool AbHom::is_zero_hom() const {
  for (int j = 0; j < m.cols(); ++j)
    if (!dst.is_zero(m.col(j))) return false;
  return true;
}

bool AbHom::equal(const AbHom& o) const {
  if (m.rows() != o.m.rows() || m.cols() != o.m.cols()) return false;
  return sub(o).is_zero_hom();
}

std::vector<Int> AbHom::apply(const std::vector<Int>& x) const { return m.apply(x); }

IntMatrix hom_kernel_lattice(const AbHom& f) {
  // x with f.m * x in col-span(dst.rels): kernel of [m | rels], first block
  IntMatrix combined = f.m.hconcat(f.dst.rels());
  IntMatrix k = kernel_basis(combined);
  std::vector<int> top(f.src.gens());
  for (int i = 0; i < f.src.gens(); ++i) top[i] = i;
  return lattice_basis(k.select_rows(top));
}

SubObject kernel(const AbHom& f) {
  IntMatrix basis = hom_kernel_lattice(f);
  auto rel = solve_columns(basis, f.src.rels());
  if (!rel) throw std::logic_error("kernel: relators escaped the kernel lattice");
  FGAbGroup g = FGAbGroup::make(basis.cols(), *rel);
  return SubObject{g, AbHom::make_unchecked(g, f.src, basis)};
}

SubObject image(const AbHom& f) {
  IntMatrix basis = lattice_basis(f.m.hconcat(f.dst.rels()));
  auto rel = solve_columns(basis, f.dst.rels());
  if (!rel) throw std::logic_error("image: relators escaped the image lattice");
  FGAbGroup g = FGAbGroup::make(basis.cols(), *rel);
  return SubObject{g, AbHom::make_unchecked(g, f.dst, basis)};
}

QuotObject cokernel(const AbHom& f) {
  FGAbGroup g = FGAbGroup::make(f.dst.gens(), f.m.hconcat(f.dst.rels()));
  return QuotObject{g, AbHom::make_unchecked(f.dst, g, IntMatrix::identity(f.dst.gens()))};
}

bool is_isomorphism(const AbHom& f) {
  if (!cokernel(f).group.is_trivial()) return false;
  return kernel(f).group.is_trivial();
}

std::optional<AbHom> inverse(const AbHom& f) {
  if (!is_isomorphism(f)) return std::nullopt;
  // solve f.m * X = I modulo dst relations: [m | rels] * [X; Y] = I
  IntMatrix combined = f.m.hconcat(f.dst.rels());
  auto sol = solve_columns(combined, IntMatrix::identity(f.dst.gens()));
  if (!sol) return std::nullopt;
  std::vector<int> top(f.src.gens());
  for (int i = 0; i < f.src.gens(); ++i) top[i] = i;
  return AbHom::make(f.dst, f.src, sol->select_rows(top));
}

FGAbGroup tensor(const FGAbGroup& g, const FGAbGroup& h) {
  if (g.rels_diagonal() && h.rels_diagonal()) {
    std::vector<Int> mods(static_cast<size_t>(g.gens()) * h.gens());
    for (int i = 0; i < g.gens(); ++i)
      for (int j = 0; j < h.gens(); ++j)
        mods[static_cast<size_t>(i) * h.gens() + j] = gcd(g.gen_modulus()[i], h.gen_modulus()[j]);
    return FGAbGroup::from_moduli(mods);
  }
  IntMatrix a = g.rels().kron(IntMatrix::identity(h.gens()));
  IntMatrix b = IntMatrix::identity(g.gens()).kron(h.rels());
  return FGAbGroup::make(g.gens() * h.gens(), a.hconcat(b));
}

FGAbGroup direct_sum(const FGAbGroup& g, const FGAbGroup& h) {
  int n = g.gens() + h.gens();
  IntMatrix rels(n, g.rels().cols() + h.rels().cols());
  for (int i = 0; i < g.gens(); ++i)
    for (int j = 0; j < g.rels().cols(); ++j) rels.at(i, j) = g.rels().at(i, j);
  for (int i = 0; i < h.gens(); ++i)
    for (int j = 0; j < h.rels().cols(); ++j) rels.at(g.gens() + i, g.rels().cols() + j) = h.rels().at(i, j);
  return FGAbGroup::make(n, std::move(rels));
}

AbHom tensor_hom(const AbHom& f, const AbHom& g) {
  return AbHom::make_unchecked(tensor(f.src, g.src), tensor(f.dst, g.dst), f.m.kron(g.m));
}

AbHom direct_sum_hom(const AbHom& f, const AbHom& g) {
  FGAbGroup s = direct_sum(f.src, g.src);
  FGAbGroup d = direct_sum(f.dst, g.dst);
  IntMatrix m(d.gens(), s.gens());
  for (int i = 0; i < f.m.rows(); ++i)
    for (int j = 0; j < f.m.cols(); ++j) m.at(i, j) = f.m.at(i, j);
  for (int i = 0; i < g.m.rows(); ++i)
    for (int j = 0; j < g.m.cols(); ++j) m.at(f.m.rows() + i, f.m.cols() + j) = g.m.at(i, j);
  return AbHom::make_unchecked(s, d, std::move(m));
}

std::vector<Int> Subquotient::represent(const std::vector<Int>& x) const {
  auto sol = solve_columns(basis, IntMatrix::from_columns(ambient.gens(), {x}));
  if (!sol) throw std::invalid_argument("represent: vector outside the kernel lattice");
  return sol->col(0);
}

Subquotient homology_at(const AbHom& d_in, const AbHom& d_out) {
  if (d_in.dst.gens() != d_out.src.gens())
    throw std::invalid_argument("homology_at: differentials not composable");
  IntMatrix comp = d_out.m.mul(d_in.m);
  for (int j = 0; j < comp.cols(); ++j)
    if (!d_out.dst.is_zero(comp.col(j)))
      throw std::invalid_argument("homology_at: d_out∘d_in nonzero on generator " + std::to_string(j));
  IntMatrix basis = hom_kernel_lattice(d_out);
  IntMatrix targets = lattice_basis(d_in.m.hconcat(d_in.dst.rels()));
  auto rel = solve_columns(basis, targets);
  if (!rel) throw std::logic_error("homology_at: boundary escaped the cycle lattice");
  FGAbGroup h = FGAbGroup::make(basis.cols(), *rel);
  return Subquotient{h, std::move(basis), d_in.dst};
}

AbHom induced_on_subquotient(const Subquotient& hx, const Subquotient& hy, const IntMatrix& u) {
  IntMatrix moved = u.mul(hx.basis);
  auto sol = solve_columns(hy.basis.hconcat(hy.ambient.rels()), moved);
  if (!sol) throw std::invalid_argument("induced map does not preserve the cycle lattice");
  std::vector<int> top(hy.basis.cols());
  for (int i = 0; i < hy.basis.cols(); ++i) top[i] = i;
  return AbHom::make(hx.group, hy.group, sol->select_rows(top));
}

}  // namespace hhx
