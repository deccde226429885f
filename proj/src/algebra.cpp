#include "hhx/algebra.hpp"

#include <sstream>

namespace hhx {

FGAbGroup tensor_all(const std::vector<FGAbGroup>& factors) {
  if (factors.empty()) return FGAbGroup::free_group(1);  // empty tensor product is Z
  FGAbGroup acc = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, factors[i]);
  return acc;
}

long chain_size(const std::vector<int>& dims) {
  long p = 1;
  for (int d : dims) {
    p *= d;
    if (p < 0 || p > (1L << 40)) throw ResourceLimit("chain_size: tensor chain overflow");
  }
  return p;
}

IntMatrix chain_apply(const std::vector<int>& dims, int pos, int consume, const IntMatrix& op) {
  long pre = 1, mid = 1, post = 1;
  for (int i = 0; i < pos; ++i) pre *= dims[i];
  for (int i = pos; i < pos + consume; ++i) mid *= dims[i];
  for (int i = pos + consume; i < static_cast<int>(dims.size()); ++i) post *= dims[i];
  if (op.cols() != mid) throw std::invalid_argument("chain_apply: operator shape mismatch");
  long out = op.rows();
  IntMatrix r(static_cast<int>(pre * out * post), static_cast<int>(pre * mid * post));
  for (long p = 0; p < pre; ++p)
    for (int s = 0; s < op.cols(); ++s)
      for (int o = 0; o < op.rows(); ++o) {
        const Int& v = op.at(o, s);
        if (v == 0) continue;
        for (long t = 0; t < post; ++t)
          r.at(static_cast<int>((p * out + o) * post + t), static_cast<int>((p * mid + s) * post + t)) = v;
      }
  return r;
}

IntMatrix chain_rotate_last_front(const std::vector<int>& dims) {
  long rest = 1;
  for (size_t i = 0; i + 1 < dims.size(); ++i) rest *= dims[i];
  long last = dims.back();
  IntMatrix r(static_cast<int>(rest * last), static_cast<int>(rest * last));
  for (long a = 0; a < rest; ++a)
    for (long l = 0; l < last; ++l) r.at(static_cast<int>(l * rest + a), static_cast<int>(a * last + l)) = 1;
  return r;
}

namespace {

std::vector<Int> pure_tensor(const std::vector<Int>& x, const std::vector<Int>& y) {
  std::vector<Int> out(x.size() * y.size(), Int(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = x[i] * y[j];
  }
  return out;
}

std::vector<Int> unit_vec(int n, int i) {
  std::vector<Int> v(n, Int(0));
  v[i] = 1;
  return v;
}

// columnwise equality of two matrices as maps into g
bool equal_into(const FGAbGroup& g, const IntMatrix& a, const IntMatrix& b, int* bad_col = nullptr) {
  for (int j = 0; j < a.cols(); ++j) {
    std::vector<Int> d(a.rows());
    for (int i = 0; i < a.rows(); ++i) d[i] = a.at(i, j) - b.at(i, j);
    if (!g.is_zero(d)) {
      if (bad_col) *bad_col = j;
      return false;
    }
  }
  return true;
}

// column j of post ∘ chain_apply(dims, pos, consume, op) without building the
// composite: the consumed block of the flat index selects a column of op,
// whose entries land in the block-collapsed chain and are pushed through post
std::vector<Int> chain_image_col(const IntMatrix& post, const std::vector<int>& dims, int pos, int consume,
                                 const IntMatrix& op, long j) {
  long mid = 1, tail = 1;
  for (int i = pos; i < pos + consume; ++i) mid *= dims[i];
  for (int i = pos + consume; i < static_cast<int>(dims.size()); ++i) tail *= dims[i];
  long t = j % tail;
  long s = (j / tail) % mid;
  long p = j / (tail * mid);
  std::vector<Int> out(post.rows(), Int(0));
  for (int o = 0; o < op.rows(); ++o) {
    const Int& v = op.at(o, static_cast<int>(s));
    if (v == 0) continue;
    int col = static_cast<int>((p * op.rows() + o) * tail + t);
    for (int r = 0; r < post.rows(); ++r) {
      const Int& w = post.at(r, col);
      if (w != 0) out[r] += v * w;
    }
  }
  return out;
}

// equality of post1∘(1⊗op1⊗1) and post2∘(1⊗op2⊗1) as maps into g. The
// composites over a long chain dwarf memory if materialized (their width is
// the full chain size), so compare column by column instead.
bool chain_equal_into(const FGAbGroup& g, const std::vector<int>& dims, const IntMatrix& post1, int pos1,
                      int consume1, const IntMatrix& op1, const IntMatrix& post2, int pos2, int consume2,
                      const IntMatrix& op2, int* bad_col = nullptr) {
  long n = chain_size(dims);
  for (long j = 0; j < n; ++j) {
    std::vector<Int> a = chain_image_col(post1, dims, pos1, consume1, op1, j);
    std::vector<Int> b = chain_image_col(post2, dims, pos2, consume2, op2, j);
    bool nz = false;
    for (size_t i = 0; i < a.size(); ++i) {
      a[i] -= b[i];
      if (a[i] != 0) nz = true;
    }
    if (nz && !g.is_zero(a)) {
      if (bad_col) *bad_col = static_cast<int>(j);
      return false;
    }
  }
  return true;
}

}  // namespace

Algebra Algebra::make(FGAbGroup g, IntMatrix mult_table, std::vector<Int> unit_coords, std::string name) {
  int n = g.gens();
  if (mult_table.rows() != n || mult_table.cols() != n * n)
    throw std::invalid_argument("algebra " + name + ": multiplication table has wrong shape");
  Algebra a;
  a.group = g;
  a.mult = AbHom::make(tensor(g, g), g, std::move(mult_table));
  a.unit = Element(g.normal_form(unit_coords));
  a.name = std::move(name);
  // associativity on generator triples: (xy)z = x(yz)
  int bad = -1;
  if (!chain_equal_into(g, {n, n, n}, a.mult.m, 0, 2, a.mult.m, a.mult.m, 1, 2, a.mult.m, &bad)) {
    int k = bad % n, j = (bad / n) % n, i = bad / (n * n);
    throw std::invalid_argument("algebra " + a.name + ": associativity fails on generators (" + std::to_string(i) +
                                "," + std::to_string(j) + "," + std::to_string(k) + ")");
  }
  for (int j = 0; j < n; ++j) {
    std::vector<Int> lu = a.mult.apply(pure_tensor(a.unit.coords, unit_vec(n, j)));
    std::vector<Int> ru = a.mult.apply(pure_tensor(unit_vec(n, j), a.unit.coords));
    if (!g.equal(lu, unit_vec(n, j)))
      throw std::invalid_argument("algebra " + a.name + ": left unit law fails on generator " + std::to_string(j));
    if (!g.equal(ru, unit_vec(n, j)))
      throw std::invalid_argument("algebra " + a.name + ": right unit law fails on generator " + std::to_string(j));
  }
  return a;
}

Element Algebra::mul(const Element& x, const Element& y) const {
  return Element(group.normal_form(mult.apply(pure_tensor(x.coords, y.coords))));
}

Element Algebra::mult_entry(int i, int j) const { return Element(mult.m.col(i * n() + j)); }

bool algebra_equal(const Algebra& a, const Algebra& b) {
  return a.group.gens() == b.group.gens() && a.group.rels() == b.group.rels() && a.mult.m == b.mult.m &&
         a.group.equal(a.unit.coords, b.unit.coords);
}

Bimodule Bimodule::make(Algebra a, Algebra b, FGAbGroup m, IntMatrix laction, IntMatrix raction,
                        std::string name) {
  int na = a.n(), nb = b.n(), nm = m.gens();
  Bimodule bm;
  bm.group = m;
  bm.laction = AbHom::make(tensor(a.group, m), m, std::move(laction));
  bm.raction = AbHom::make(tensor(m, b.group), m, std::move(raction));
  bm.name = std::move(name);
  const IntMatrix& L = bm.laction.m;
  const IntMatrix& R = bm.raction.m;
  int bad = -1;
  // (xy)m = x(ym) and m(xy) = (mx)y
  if (!chain_equal_into(m, {na, na, nm}, L, 0, 2, a.mult.m, L, 1, 2, L, &bad))
    throw std::invalid_argument("bimodule " + bm.name + ": left associativity fails at flat index " +
                                std::to_string(bad));
  if (!chain_equal_into(m, {nm, nb, nb}, R, 1, 2, b.mult.m, R, 0, 2, R, &bad))
    throw std::invalid_argument("bimodule " + bm.name + ": right associativity fails at flat index " +
                                std::to_string(bad));
  // actions commute: (xm)y = x(my)
  if (!chain_equal_into(m, {na, nm, nb}, R, 0, 2, L, L, 1, 2, R, &bad))
    throw std::invalid_argument("bimodule " + bm.name + ": actions fail to commute at flat index " +
                                std::to_string(bad));
  for (int j = 0; j < nm; ++j) {
    if (!m.equal(bm.laction.apply(pure_tensor(a.unit.coords, unit_vec(nm, j))), unit_vec(nm, j)))
      throw std::invalid_argument("bimodule " + bm.name + ": left unit fails on generator " + std::to_string(j));
    if (!m.equal(bm.raction.apply(pure_tensor(unit_vec(nm, j), b.unit.coords)), unit_vec(nm, j)))
      throw std::invalid_argument("bimodule " + bm.name + ": right unit fails on generator " + std::to_string(j));
  }
  bm.left_alg = std::move(a);
  bm.right_alg = std::move(b);
  return bm;
}

Element Bimodule::act_left(const Element& a, const Element& m) const {
  return Element(group.normal_form(laction.apply(pure_tensor(a.coords, m.coords))));
}
Element Bimodule::act_right(const Element& m, const Element& b) const {
  return Element(group.normal_form(raction.apply(pure_tensor(m.coords, b.coords))));
}

Bimodule unit_bimodule(const Algebra& a) {
  return Bimodule::make(a, a, a.group, a.mult.m, a.mult.m, "U(" + a.name + ")");
}

BimoduleHom BimoduleHom::make(Bimodule src, Bimodule dst, IntMatrix m) {
  if (!algebra_equal(src.left_alg, dst.left_alg) || !algebra_equal(src.right_alg, dst.right_alg))
    throw std::invalid_argument("bimodule hom: source and target live over different algebras");
  BimoduleHom h;
  h.m = std::move(m);
  AbHom f = AbHom::make(src.group, dst.group, h.m);  // well-definedness
  int na = src.left_alg.n(), nb = src.right_alg.n(), ns = src.n();
  int bad = -1;
  if (!chain_equal_into(dst.group, {na, ns}, h.m, 0, 2, src.laction.m, dst.laction.m, 1, 1, h.m, &bad))
    throw std::invalid_argument("bimodule hom: not left-equivariant at flat index " + std::to_string(bad));
  if (!chain_equal_into(dst.group, {ns, nb}, h.m, 0, 2, src.raction.m, dst.raction.m, 0, 1, h.m, &bad))
    throw std::invalid_argument("bimodule hom: not right-equivariant at flat index " + std::to_string(bad));
  h.src = std::move(src);
  h.dst = std::move(dst);
  return h;
}

BimoduleHom BimoduleHom::identity(const Bimodule& b) {
  return BimoduleHom::make(b, b, IntMatrix::identity(b.n()));
}

BimoduleHom BimoduleHom::compose(const BimoduleHom& inner) const {
  return BimoduleHom::make(inner.src, dst, m.mul(inner.m));
}

AbHom BimoduleHom::as_ab() const { return AbHom::make_unchecked(src.group, dst.group, m); }

bool BimoduleHom::equal(const BimoduleHom& o) const { return as_ab().equal(o.as_ab()); }

Algebra matrix_algebra(const Algebra& a, int r) {
  int n = a.n();
  int N = r * r * n;
  IntMatrix rels = IntMatrix::identity(r * r).kron(a.group.rels());
  FGAbGroup g = FGAbGroup::make(N, std::move(rels));
  IntMatrix table(N, N * N);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int s = 0; s < n; ++s) {
        int g1 = (i * r + j) * n + s;
        for (int k = 0; k < r; ++k)
          for (int l = 0; l < r; ++l)
            for (int t = 0; t < n; ++t) {
              if (j != k) continue;
              int g2 = (k * r + l) * n + t;
              std::vector<Int> prod = a.mult.m.col(s * n + t);
              for (int u = 0; u < n; ++u)
                if (prod[u] != 0) table.at((i * r + l) * n + u, g1 * N + g2) = prod[u];
            }
      }
  std::vector<Int> unit(N, Int(0));
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < n; ++t) unit[(i * r + i) * n + t] = a.unit.coords[t];
  return Algebra::make(std::move(g), std::move(table), std::move(unit),
                       "M" + std::to_string(r) + "(" + a.name + ")");
}

Bimodule row_bimodule(const Algebra& a, int r) {
  Algebra b = matrix_algebra(a, r);
  int n = a.n(), N = b.n(), nm = r * n;
  FGAbGroup g = FGAbGroup::make(nm, IntMatrix::identity(r).kron(a.group.rels()));
  IntMatrix lact(nm, n * nm);
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < r; ++i)
      for (int t = 0; t < n; ++t) {
        std::vector<Int> prod = a.mult.m.col(s * n + t);
        for (int u = 0; u < n; ++u)
          if (prod[u] != 0) lact.at(i * n + u, s * nm + i * n + t) = prod[u];
      }
  IntMatrix ract(nm, nm * N);
  for (int i = 0; i < r; ++i)
    for (int s = 0; s < n; ++s)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l)
          for (int t = 0; t < n; ++t) {
            if (i != k) continue;
            std::vector<Int> prod = a.mult.m.col(s * n + t);
            for (int u = 0; u < n; ++u)
              if (prod[u] != 0) ract.at(l * n + u, (i * n + s) * N + (k * r + l) * n + t) = prod[u];
          }
  return Bimodule::make(a, std::move(b), std::move(g), std::move(lact), std::move(ract), "row");
}

Bimodule column_bimodule(const Algebra& a, int r) {
  Algebra b = matrix_algebra(a, r);
  int n = a.n(), N = b.n(), nm = r * n;
  FGAbGroup g = FGAbGroup::make(nm, IntMatrix::identity(r).kron(a.group.rels()));
  IntMatrix lact(nm, N * nm);
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l)
      for (int t = 0; t < n; ++t)
        for (int i = 0; i < r; ++i)
          for (int s = 0; s < n; ++s) {
            if (l != i) continue;
            std::vector<Int> prod = a.mult.m.col(t * n + s);
            for (int u = 0; u < n; ++u)
              if (prod[u] != 0) lact.at(k * n + u, ((k * r + l) * n + t) * nm + i * n + s) = prod[u];
          }
  IntMatrix ract(nm, nm * n);
  for (int i = 0; i < r; ++i)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        std::vector<Int> prod = a.mult.m.col(s * n + t);
        for (int u = 0; u < n; ++u)
          if (prod[u] != 0) ract.at(i * n + u, (i * n + s) * n + t) = prod[u];
      }
  return Bimodule::make(std::move(b), a, std::move(g), std::move(lact), std::move(ract), "col");
}

Bimodule tensor_over(const Bimodule& m, const Bimodule& n) {
  if (!algebra_equal(m.right_alg, n.left_alg))
    throw std::invalid_argument("tensor_over: mismatched middle algebra (" + m.name + " vs " + n.name + ")");
  int nm = m.n(), nn = n.n(), nb = m.right_alg.n();
  FGAbGroup t0 = tensor(m.group, n.group);
  IntMatrix balance(nm * nn, nm * nb * nn);
  for (int i = 0; i < nm; ++i)
    for (int k = 0; k < nb; ++k)
      for (int j = 0; j < nn; ++j) {
        int cidx = (i * nb + k) * nn + j;
        std::vector<Int> mb = m.raction.m.col(i * nb + k);
        for (int r = 0; r < nm; ++r)
          if (mb[r] != 0) balance.at(r * nn + j, cidx) += mb[r];
        std::vector<Int> bn = n.laction.m.col(k * nn + j);
        for (int s = 0; s < nn; ++s)
          if (bn[s] != 0) balance.at(i * nn + s, cidx) -= bn[s];
      }
  FGAbGroup g = FGAbGroup::make(nm * nn, t0.rels().hconcat(balance));
  IntMatrix lact = chain_apply({m.left_alg.n(), nm, nn}, 0, 2, m.laction.m);
  IntMatrix ract = chain_apply({nm, nn, n.right_alg.n()}, 1, 2, n.raction.m);
  return Bimodule::make(m.left_alg, n.right_alg, std::move(g), std::move(lact), std::move(ract),
                        m.name + "*" + n.name);
}

BimoduleHom tensor_over_hom(const BimoduleHom& f, const BimoduleHom& g) {
  Bimodule src = tensor_over(f.src, g.src);
  Bimodule dst = tensor_over(f.dst, g.dst);
  return BimoduleHom::make(std::move(src), std::move(dst), f.m.kron(g.m));
}

BimoduleHom minimize_presentation(const Bimodule& m) {
  CanonicalIso c = m.group.canonical_iso();
  int na = m.left_alg.n(), nb = m.right_alg.n();
  IntMatrix lact = c.to.m.mul(m.laction.m).mul(IntMatrix::identity(na).kron(c.from.m));
  IntMatrix ract = c.to.m.mul(m.raction.m).mul(c.from.m.kron(IntMatrix::identity(nb)));
  Bimodule small = Bimodule::make(m.left_alg, m.right_alg, c.canon, std::move(lact), std::move(ract),
                                  m.name + " (min)");
  return BimoduleHom::make(m, std::move(small), c.to.m);
}

BimoduleHom associator(const Bimodule& m, const Bimodule& n, const Bimodule& p) {
  Bimodule lhs = tensor_over(tensor_over(m, n), p);
  Bimodule rhs = tensor_over(m, tensor_over(n, p));
  return BimoduleHom::make(std::move(lhs), std::move(rhs), IntMatrix::identity(m.n() * n.n() * p.n()));
}

BimoduleHom left_unitor(const Bimodule& m) {
  Bimodule src = tensor_over(unit_bimodule(m.left_alg), m);
  return BimoduleHom::make(std::move(src), m, m.laction.m);
}

BimoduleHom right_unitor(const Bimodule& m) {
  Bimodule src = tensor_over(m, unit_bimodule(m.right_alg));
  return BimoduleHom::make(std::move(src), m, m.raction.m);
}

BimoduleHom left_unitor_inv(const Bimodule& m) {
  int na = m.left_alg.n(), nm = m.n();
  Bimodule dst = tensor_over(unit_bimodule(m.left_alg), m);
  IntMatrix u(na * nm, nm);
  for (int j = 0; j < nm; ++j)
    for (int i = 0; i < na; ++i)
      if (m.left_alg.unit.coords[i] != 0) u.at(i * nm + j, j) = m.left_alg.unit.coords[i];
  return BimoduleHom::make(m, std::move(dst), std::move(u));
}

BimoduleHom right_unitor_inv(const Bimodule& m) {
  int nb = m.right_alg.n(), nm = m.n();
  Bimodule dst = tensor_over(m, unit_bimodule(m.right_alg));
  IntMatrix u(nm * nb, nm);
  for (int j = 0; j < nm; ++j)
    for (int t = 0; t < nb; ++t)
      if (m.right_alg.unit.coords[t] != 0) u.at(j * nb + t, j) = m.right_alg.unit.coords[t];
  return BimoduleHom::make(m, std::move(dst), std::move(u));
}

SimplicialAb bar_resolution(const Bimodule& m, const Algebra& b, const Bimodule& n, int trunc) {
  if (trunc < 1) throw std::invalid_argument("bar_resolution: truncation must be >= 1");
  if (!algebra_equal(m.right_alg, b) || !algebra_equal(n.left_alg, b))
    throw std::invalid_argument("bar_resolution: modules do not match the middle algebra");
  int nm = m.n(), nn = n.n(), nb = b.n();
  IntMatrix unitcol(nb, 1);
  for (int t = 0; t < nb; ++t) unitcol.at(t, 0) = b.unit.coords[t];
  std::vector<FGAbGroup> levels;
  std::vector<std::vector<AbHom>> faces(trunc + 1), degens(trunc);
  std::vector<std::vector<int>> dims(trunc + 1);
  long total = 0;
  for (int p = 0; p <= trunc; ++p) {
    dims[p].push_back(nm);
    for (int i = 0; i < p; ++i) dims[p].push_back(nb);
    dims[p].push_back(nn);
    total += chain_size(dims[p]);
  }
  check_resource(total, "bar_resolution");
  for (int p = 0; p <= trunc; ++p) {
    std::vector<FGAbGroup> fs = {m.group};
    for (int i = 0; i < p; ++i) fs.push_back(b.group);
    fs.push_back(n.group);
    levels.push_back(tensor_all(fs));
  }
  for (int p = 1; p <= trunc; ++p)
    for (int i = 0; i <= p; ++i) {
      IntMatrix f;
      if (i == 0)
        f = chain_apply(dims[p], 0, 2, m.raction.m);
      else if (i == p)
        f = chain_apply(dims[p], p, 2, n.laction.m);
      else
        f = chain_apply(dims[p], i, 2, b.mult.m);
      faces[p].push_back(AbHom::make(levels[p], levels[p - 1], std::move(f)));
    }
  for (int p = 0; p < trunc; ++p)
    for (int i = 0; i <= p; ++i)
      degens[p].push_back(AbHom::make(levels[p], levels[p + 1], chain_apply(dims[p], i + 1, 0, unitcol)));
  return SimplicialAb::make(std::move(levels), std::move(faces), std::move(degens));
}

bool is_algebra_map(const Algebra& a, const Algebra& b, const IntMatrix& f) {
  if (f.rows() != b.n() || f.cols() != a.n()) return false;
  AbHom h = AbHom::make_unchecked(a.group, b.group, f);
  if (!h.well_defined()) return false;
  // f(xy) = f(x) f(y) on generators
  IntMatrix lhs = f.mul(a.mult.m);
  IntMatrix rhs = b.mult.m.mul(f.kron(f));
  if (!equal_into(b.group, lhs, rhs)) return false;
  return b.group.equal(h.apply(a.unit.coords), b.unit.coords);
}

Bimodule twist_left(const Bimodule& m, const AbHom& phi) {
  const Algebra& a = m.left_alg;
  if (!is_algebra_map(a, a, phi.m) || !is_isomorphism(phi))
    throw std::invalid_argument("twist_left: not an algebra automorphism of " + a.name);
  IntMatrix lact = m.laction.m.mul(chain_apply({a.n(), m.n()}, 0, 1, phi.m));
  return Bimodule::make(a, m.right_alg, m.group, std::move(lact), m.raction.m, "tw(" + m.name + ")");
}

Bimodule twist_right(const Bimodule& m, const AbHom& psi) {
  const Algebra& b = m.right_alg;
  if (!is_algebra_map(b, b, psi.m) || !is_isomorphism(psi))
    throw std::invalid_argument("twist_right: not an algebra automorphism of " + b.name);
  IntMatrix ract = m.raction.m.mul(chain_apply({m.n(), b.n()}, 1, 1, psi.m));
  return Bimodule::make(m.left_alg, b, m.group, m.laction.m, std::move(ract), m.name + "tw");
}

namespace {

BimoduleHom associator_inv(const Bimodule& m, const Bimodule& n, const Bimodule& p) {
  Bimodule lhs = tensor_over(m, tensor_over(n, p));
  Bimodule rhs = tensor_over(tensor_over(m, n), p);
  return BimoduleHom::make(std::move(lhs), std::move(rhs), IntMatrix::identity(m.n() * n.n() * p.n()));
}

}  // namespace

CheckReport check_dual_pair(const DualPairData& d) {
  CheckReport r;
  bool typed = algebra_equal(d.m.left_alg, d.a) && algebra_equal(d.m.right_alg, d.b) &&
               algebra_equal(d.n.left_alg, d.b) && algebra_equal(d.n.right_alg, d.a);
  r.record("pair typing", typed);
  if (!typed) return r;
  // triangle on M: (id⊙ev) ∘ assoc ∘ (coev⊙id) = l ∘ r⁻¹-style unitor match
  BimoduleHom t1 = right_unitor(d.m)
                       .compose(tensor_over_hom(BimoduleHom::identity(d.m), d.eval))
                       .compose(associator(d.m, d.n, d.m))
                       .compose(tensor_over_hom(d.coeval, BimoduleHom::identity(d.m)));
  r.record("triangle identity on M", t1.equal(left_unitor(d.m)));
  // triangle on N: (ev⊙id) ∘ assoc⁻¹ ∘ (id⊙coev) = unitors
  BimoduleHom t2 = left_unitor(d.n)
                       .compose(tensor_over_hom(d.eval, BimoduleHom::identity(d.n)))
                       .compose(associator_inv(d.n, d.m, d.n))
                       .compose(tensor_over_hom(BimoduleHom::identity(d.n), d.coeval));
  r.record("triangle identity on N", t2.equal(right_unitor(d.n)));
  return r;
}

CheckReport check_morita(const DualPairData& d) {
  CheckReport r = check_dual_pair(d);
  if (!r.ok) return r;
  r.record("evaluation is an isomorphism", is_isomorphism(d.eval.as_ab()));
  r.record("coevaluation is an isomorphism", is_isomorphism(d.coeval.as_ab()));
  return r;
}

DualPairData matrix_morita_pair(const Algebra& a, int r) {
  DualPairData d;
  d.a = a;
  d.m = row_bimodule(a, r);
  d.n = column_bimodule(a, r);
  d.b = d.m.right_alg;
  // rebuild n over the exact same matrix algebra value
  int n = a.n(), N = d.b.n(), nm = r * n;
  Bimodule mn = tensor_over(d.m, d.n);
  Bimodule nm_ = tensor_over(d.n, d.m);
  // 1 ↦ e_0·u ⊗ f_0; the balance relations make every slot i give the same
  // class, and summing slots would multiply the unit by r
  IntMatrix co(nm * nm, n);
  for (int u = 0; u < n; ++u)
    for (int t = 0; t < n; ++t)
      if (a.unit.coords[t] != 0) co.at((0 * n + u) * nm + (0 * n + t), u) += a.unit.coords[t];
  d.coeval = BimoduleHom::make(unit_bimodule(a), mn, std::move(co));
  IntMatrix ev(N, nm * nm);
  for (int i = 0; i < r; ++i)
    for (int s = 0; s < n; ++s)
      for (int j = 0; j < r; ++j)
        for (int t = 0; t < n; ++t) {
          std::vector<Int> prod = a.mult.m.col(s * n + t);
          for (int u = 0; u < n; ++u)
            if (prod[u] != 0) ev.at((i * r + j) * n + u, (i * n + s) * nm + (j * n + t)) = prod[u];
        }
  d.eval = BimoduleHom::make(nm_, unit_bimodule(d.b), std::move(ev));
  return d;
}

namespace {

// free one-sided module A^k with the flat (copy, generator) layout
struct FreeModule {
  FGAbGroup group;
  IntMatrix action;  // left: A ⊗ F -> F, right: F ⊗ A -> F
};

FreeModule free_left_module(const Algebra& a, int k) {
  int n = a.n(), nf = k * n;
  FreeModule f;
  f.group = FGAbGroup::make(nf, IntMatrix::identity(k).kron(a.group.rels()));
  f.action = IntMatrix(nf, n * nf);
  for (int s = 0; s < n; ++s)
    for (int c = 0; c < k; ++c)
      for (int t = 0; t < n; ++t) {
        std::vector<Int> prod = a.mult.m.col(s * n + t);
        for (int u = 0; u < n; ++u)
          if (prod[u] != 0) f.action.at(c * n + u, s * nf + c * n + t) = prod[u];
      }
  return f;
}

FreeModule free_right_module(const Algebra& a, int k) {
  int n = a.n(), nf = k * n;
  FreeModule f;
  f.group = FGAbGroup::make(nf, IntMatrix::identity(k).kron(a.group.rels()));
  f.action = IntMatrix(nf, nf * n);
  for (int c = 0; c < k; ++c)
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s) {
        std::vector<Int> prod = a.mult.m.col(t * n + s);
        for (int u = 0; u < n; ++u)
          if (prod[u] != 0) f.action.at(c * n + u, (c * n + t) * n + s) = prod[u];
      }
  return f;
}

}  // namespace

CheckReport check_left_summand(const Bimodule& m, const SummandCert& c) {
  CheckReport r;
  const Algebra& a = m.left_alg;
  FreeModule f = free_left_module(a, c.copies);
  int na = a.n(), nm = m.n(), nf = f.group.gens();
  bool shapes = c.incl.rows() == nf && c.incl.cols() == nm && c.proj.rows() == nm && c.proj.cols() == nf;
  r.record("certificate shapes", shapes);
  if (!shapes) return r;
  r.record("inclusion well-defined", AbHom::make_unchecked(m.group, f.group, c.incl).well_defined());
  r.record("projection well-defined", AbHom::make_unchecked(f.group, m.group, c.proj).well_defined());
  r.record("inclusion equivariant", equal_into(f.group, c.incl.mul(m.laction.m),
                                               f.action.mul(chain_apply({na, nm}, 1, 1, c.incl))));
  r.record("projection equivariant", equal_into(m.group, c.proj.mul(f.action),
                                                m.laction.m.mul(chain_apply({na, nf}, 1, 1, c.proj))));
  r.record("splitting", equal_into(m.group, c.proj.mul(c.incl), IntMatrix::identity(nm)));
  return r;
}

CheckReport check_right_summand(const Bimodule& m, const SummandCert& c) {
  CheckReport r;
  const Algebra& a = m.right_alg;
  FreeModule f = free_right_module(a, c.copies);
  int na = a.n(), nm = m.n(), nf = f.group.gens();
  bool shapes = c.incl.rows() == nf && c.incl.cols() == nm && c.proj.rows() == nm && c.proj.cols() == nf;
  r.record("certificate shapes", shapes);
  if (!shapes) return r;
  r.record("inclusion well-defined", AbHom::make_unchecked(m.group, f.group, c.incl).well_defined());
  r.record("projection well-defined", AbHom::make_unchecked(f.group, m.group, c.proj).well_defined());
  r.record("inclusion equivariant", equal_into(f.group, c.incl.mul(m.raction.m),
                                               f.action.mul(chain_apply({nm, na}, 0, 1, c.incl))));
  r.record("projection equivariant", equal_into(m.group, c.proj.mul(f.action),
                                                m.raction.m.mul(chain_apply({nf, na}, 0, 1, c.proj))));
  r.record("splitting", equal_into(m.group, c.proj.mul(c.incl), IntMatrix::identity(nm)));
  return r;
}

SummandCert free_relabel_cert(const Bimodule& m, int copies) {
  SummandCert c;
  c.copies = copies;
  c.incl = IntMatrix::identity(m.n());
  c.proj = IntMatrix::identity(m.n());
  return c;
}

}  // namespace hhx
