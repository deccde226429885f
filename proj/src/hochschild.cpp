#include "hhx/hochschild.hpp"

#include <sstream>

namespace hhx {

namespace {

IntMatrix unit_column(const Algebra& a) {
  IntMatrix u(a.n(), 1);
  for (int t = 0; t < a.n(); ++t) u.at(t, 0) = a.unit.coords[t];
  return u;
}

std::vector<Int> pure2(const std::vector<Int>& x, const std::vector<Int>& y) {
  std::vector<Int> out(x.size() * y.size(), Int(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = x[i] * y[j];
  }
  return out;
}

}  // namespace

SimplicialAb cyclic_bar(const Algebra& a, const Bimodule& m, int trunc) {
  if (trunc < 1) throw std::invalid_argument("cyclic_bar: truncation must be >= 1");
  if (!algebra_equal(m.left_alg, a) || !algebra_equal(m.right_alg, a))
    throw std::invalid_argument("cyclic_bar: coefficient is not an (A,A)-bimodule over the given algebra");
  int nm = m.n(), na = a.n();
  long total = 0;
  std::vector<std::vector<int>> dims(trunc + 1);
  for (int q = 0; q <= trunc; ++q) {
    dims[q].push_back(nm);
    for (int i = 0; i < q; ++i) dims[q].push_back(na);
    total += chain_size(dims[q]);
  }
  check_resource(total, "cyclic_bar(" + a.name + "; " + m.name + ")");
  std::vector<FGAbGroup> levels;
  for (int q = 0; q <= trunc; ++q) {
    std::vector<FGAbGroup> fs = {m.group};
    for (int i = 0; i < q; ++i) fs.push_back(a.group);
    levels.push_back(tensor_all(fs));
  }
  IntMatrix unitcol = unit_column(a);
  std::vector<std::vector<AbHom>> faces(trunc + 1), degens(trunc);
  for (int q = 1; q <= trunc; ++q)
    for (int i = 0; i <= q; ++i) {
      IntMatrix f;
      if (i == 0) {
        f = chain_apply(dims[q], 0, 2, m.raction.m);
      } else if (i == q) {
        std::vector<int> rot_dims;  // after moving a_q to the front
        rot_dims.push_back(na);
        for (size_t k = 0; k + 1 < dims[q].size(); ++k) rot_dims.push_back(dims[q][k]);
        f = chain_apply(rot_dims, 0, 2, m.laction.m).mul(chain_rotate_last_front(dims[q]));
      } else {
        f = chain_apply(dims[q], i, 2, a.mult.m);
      }
      faces[q].push_back(AbHom::make(levels[q], levels[q - 1], std::move(f)));
    }
  for (int q = 0; q < trunc; ++q)
    for (int i = 0; i <= q; ++i)
      degens[q].push_back(AbHom::make(levels[q], levels[q + 1], chain_apply(dims[q], i + 1, 0, unitcol)));
  return SimplicialAb::make(std::move(levels), std::move(faces), std::move(degens));
}

QuotObject hh0_closed_form(const Bimodule& m) {
  int nm = m.n(), na = m.left_alg.n();
  IntMatrix comm(nm, na * nm);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nm; ++j) {
      std::vector<Int> am = m.laction.m.col(i * nm + j);
      std::vector<Int> ma = m.raction.m.col(j * na + i);
      for (int r = 0; r < nm; ++r) comm.at(r, i * nm + j) = am[r] - ma[r];
    }
  FGAbGroup g = FGAbGroup::make(nm, m.group.rels().hconcat(comm));
  QuotObject q;
  q.projection = AbHom::make(m.group, g, IntMatrix::identity(nm));
  q.group = std::move(g);
  return q;
}

HomologyReport hh(const Algebra& a, const Bimodule& m, int max_degree, bool normalized) {
  SimplicialAb s = cyclic_bar(a, m, max_degree + 1);
  HomologyReport rep = s.homology(max_degree, normalized);
  QuotObject h0 = hh0_closed_form(m);
  if (rep.groups.at(0).canonical_string() != h0.group.canonical_string())
    throw std::logic_error("hh: degree-0 value " + rep.groups.at(0).canonical_string() +
                           " disagrees with the closed form " + h0.group.canonical_string());
  return rep;
}

HomologyReport hh(const Algebra& a, int max_degree, bool normalized) {
  return hh(a, unit_bimodule(a), max_degree, normalized);
}

QuotObject shadow0(const Bimodule& m) {
  if (!algebra_equal(m.left_alg, m.right_alg))
    throw std::invalid_argument("shadow0: needs an (A,A)-bimodule");
  return hh0_closed_form(m);
}

AbHom shadow0_induced(const BimoduleHom& f) {
  QuotObject s = shadow0(f.src), d = shadow0(f.dst);
  return AbHom::make(s.group, d.group, f.m);
}

AbHom shadow0_swap(const Bimodule& m, const Bimodule& n) {
  QuotObject s = shadow0(tensor_over(m, n));
  QuotObject d = shadow0(tensor_over(n, m));
  int nm = m.n(), nn = n.n();
  IntMatrix perm(nm * nn, nm * nn);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nn; ++j) perm.at(j * nm + i, i * nn + j) = 1;
  return AbHom::make(s.group, d.group, std::move(perm));
}

BisimplicialAb hh_bicomplex(const Bimodule& m, const Bimodule& n, int ptrunc, int qtrunc) {
  const Algebra& a = m.left_alg;
  const Algebra& b = m.right_alg;
  if (!algebra_equal(n.left_alg, b) || !algebra_equal(n.right_alg, a))
    throw std::invalid_argument("hh_bicomplex: need M: (A,B) and N: (B,A)");
  int nm = m.n(), nn = n.n(), na = a.n(), nb = b.n();
  auto dims_at = [&](int p, int q) {
    std::vector<int> d;
    d.push_back(nm);
    for (int i = 0; i < p; ++i) d.push_back(nb);
    d.push_back(nn);
    for (int j = 0; j < q; ++j) d.push_back(na);
    return d;
  };
  long total = 0;
  for (int p = 0; p <= ptrunc; ++p)
    for (int q = 0; q <= qtrunc; ++q) total += chain_size(dims_at(p, q));
  check_resource(total, "hh_bicomplex");
  std::vector<std::vector<FGAbGroup>> levels(ptrunc + 1, std::vector<FGAbGroup>(qtrunc + 1));
  for (int p = 0; p <= ptrunc; ++p)
    for (int q = 0; q <= qtrunc; ++q) {
      std::vector<FGAbGroup> fs = {m.group};
      for (int i = 0; i < p; ++i) fs.push_back(b.group);
      fs.push_back(n.group);
      for (int j = 0; j < q; ++j) fs.push_back(a.group);
      levels[p][q] = tensor_all(fs);
    }
  IntMatrix unit_b = unit_column(b), unit_a = unit_column(a);
  std::vector<std::vector<std::vector<AbHom>>> hf(ptrunc + 1, std::vector<std::vector<AbHom>>(qtrunc + 1));
  std::vector<std::vector<std::vector<AbHom>>> hd(ptrunc + 1, std::vector<std::vector<AbHom>>(qtrunc + 1));
  std::vector<std::vector<std::vector<AbHom>>> vf(ptrunc + 1, std::vector<std::vector<AbHom>>(qtrunc + 1));
  std::vector<std::vector<std::vector<AbHom>>> vd(ptrunc + 1, std::vector<std::vector<AbHom>>(qtrunc + 1));
  for (int p = 0; p <= ptrunc; ++p)
    for (int q = 0; q <= qtrunc; ++q) {
      std::vector<int> dims = dims_at(p, q);
      if (p >= 1)
        for (int i = 0; i <= p; ++i) {
          IntMatrix f;
          if (i == 0)
            f = chain_apply(dims, 0, 2, m.raction.m);
          else if (i == p)
            f = chain_apply(dims, p, 2, n.laction.m);
          else
            f = chain_apply(dims, i, 2, b.mult.m);
          hf[p][q].push_back(AbHom::make(levels[p][q], levels[p - 1][q], std::move(f)));
        }
      if (p < ptrunc)
        for (int i = 0; i <= p; ++i)
          hd[p][q].push_back(AbHom::make(levels[p][q], levels[p + 1][q], chain_apply(dims, i + 1, 0, unit_b)));
      if (q >= 1)
        for (int j = 0; j <= q; ++j) {
          IntMatrix f;
          if (j == 0) {
            f = chain_apply(dims, p + 1, 2, n.raction.m);
          } else if (j == q) {
            std::vector<int> rot_dims;
            rot_dims.push_back(na);
            for (size_t k = 0; k + 1 < dims.size(); ++k) rot_dims.push_back(dims[k]);
            f = chain_apply(rot_dims, 0, 2, m.laction.m).mul(chain_rotate_last_front(dims));
          } else {
            f = chain_apply(dims, p + 1 + j, 2, a.mult.m);
          }
          vf[p][q].push_back(AbHom::make(levels[p][q], levels[p][q - 1], std::move(f)));
        }
      if (q < qtrunc)
        for (int j = 0; j <= q; ++j)
          vd[p][q].push_back(
              AbHom::make(levels[p][q], levels[p][q + 1], chain_apply(dims, p + 2 + j, 0, unit_a)));
    }
  return BisimplicialAb::make(std::move(levels), std::move(hf), std::move(hd), std::move(vf), std::move(vd));
}

namespace {

// candidate X_{p,q} -> Y_{q,p}; rotated = the block rotation of the proof,
// otherwise the plain pairwise block transposition (the negative control).
IntMatrix swap_candidate(int nm, int nb, int nn, int na, int p, int q, bool rotated) {
  long bs = 1, as = 1;
  for (int i = 0; i < p; ++i) bs *= nb;
  for (int j = 0; j < q; ++j) as *= na;
  long size = nm * bs * nn * as;
  IntMatrix r(static_cast<int>(size), static_cast<int>(size));
  for (long im = 0; im < nm; ++im)
    for (long ib = 0; ib < bs; ++ib)
      for (long in = 0; in < nn; ++in)
        for (long ia = 0; ia < as; ++ia) {
          long src = ((im * bs + ib) * nn + in) * as + ia;
          long dst = rotated ? ((in * as + ia) * nm + im) * bs + ib   // (n; a; m; b)
                             : ((im * as + ia) * nn + in) * bs + ib;  // (m; a; n; b), forgets the rotation
          r.at(static_cast<int>(dst), static_cast<int>(src)) = 1;
        }
  return r;
}

}  // namespace

SwapReport bicyclic_swap_check(const Algebra& a, const Algebra& b, const Bimodule& m, const Bimodule& n, int T,
                               bool omit_rotation) {
  SwapReport rep;
  if (!algebra_equal(m.left_alg, a) || !algebra_equal(m.right_alg, b) || !algebra_equal(n.left_alg, b) ||
      !algebra_equal(n.right_alg, a))
    throw std::invalid_argument("bicyclic_swap_check: need M: (A,B), N: (B,A)");
  if (omit_rotation && (m.n() != n.n() || a.n() != b.n()))
    throw std::invalid_argument("bicyclic_swap_check: the non-rotated control needs matching shapes");
  BisimplicialAb x = hh_bicomplex(m, n, T, T);
  BisimplicialAb y = hh_bicomplex(n, m, T, T);
  int nm = m.n(), nn = n.n(), na = a.n(), nb = b.n();
  auto sigma = [&](int p, int q) { return swap_candidate(nm, nb, nn, na, p, q, !omit_rotation); };
  for (int p = 0; p <= T; ++p)
    for (int q = 0; q <= T; ++q) {
      std::ostringstream at;
      at << " at bidegree (" << p << "," << q << ")";
      AbHom s = AbHom::make(x.level(p, q), y.level(q, p), sigma(p, q));
      rep.checks.record("rotation map is an isomorphism" + at.str(), is_isomorphism(s));
      for (int i = 0; p >= 1 && i <= p; ++i) {
        AbHom lhs = AbHom::make_unchecked(x.level(p, q), y.level(q, p - 1), sigma(p - 1, q).mul(x.hface(p, q, i).m));
        AbHom rhs = AbHom::make_unchecked(x.level(p, q), y.level(q, p - 1), y.vface(q, p, i).m.mul(sigma(p, q)));
        std::string which = (i == p) ? "inner last face" : "inner face " + std::to_string(i);
        rep.checks.record(which + at.str(), lhs.equal(rhs));
      }
      for (int j = 0; q >= 1 && j <= q; ++j) {
        AbHom lhs = AbHom::make_unchecked(x.level(p, q), y.level(q - 1, p), sigma(p, q - 1).mul(x.vface(p, q, j).m));
        AbHom rhs = AbHom::make_unchecked(x.level(p, q), y.level(q - 1, p), y.hface(q, p, j).m.mul(sigma(p, q)));
        std::string which = (j == q) ? "outer last face" : "outer face " + std::to_string(j);
        rep.checks.record(which + at.str(), lhs.equal(rhs));
      }
      for (int i = 0; p < T && i <= p; ++i) {
        AbHom lhs = AbHom::make_unchecked(x.level(p, q), y.level(q, p + 1), sigma(p + 1, q).mul(x.hdegen(p, q, i).m));
        AbHom rhs = AbHom::make_unchecked(x.level(p, q), y.level(q, p + 1), y.vdegen(q, p, i).m.mul(sigma(p, q)));
        rep.checks.record("inner degeneracy " + std::to_string(i) + at.str(), lhs.equal(rhs));
      }
      for (int j = 0; q < T && j <= q; ++j) {
        AbHom lhs = AbHom::make_unchecked(x.level(p, q), y.level(q + 1, p), sigma(p, q + 1).mul(x.vdegen(p, q, j).m));
        AbHom rhs = AbHom::make_unchecked(x.level(p, q), y.level(q + 1, p), y.hdegen(q, p, j).m.mul(sigma(p, q)));
        rep.checks.record("outer degeneracy " + std::to_string(j) + at.str(), lhs.equal(rhs));
      }
    }
  rep.left = x.diagonal().homology(T - 1, true);
  rep.right = y.diagonal().homology(T - 1, true);
  rep.homology_match = rep.left.equal_canonical(rep.right);
  if (!rep.homology_match) {
    if (!rep.checks.detail.empty()) rep.checks.detail += "; ";
    rep.checks.detail += "diagonal homology mismatch";
  }
  return rep;
}

CheckReport shadow_coherence_check(const Bimodule& m, const Bimodule& n, const Bimodule& p) {
  CheckReport r;
  bool typed = algebra_equal(m.right_alg, n.left_alg) && algebra_equal(n.right_alg, p.left_alg) &&
               algebra_equal(p.right_alg, m.left_alg);
  r.record("triple typing", typed);
  if (!typed) return r;
  Bimodule mn = tensor_over(m, n);
  Bimodule np = tensor_over(n, p);
  Bimodule pm = tensor_over(p, m);
  // hexagon: θ then Sh(a) along the top equals Sh(a);θ;Sh(a);θ along the bottom
  AbHom top1 = shadow0_swap(mn, p);  // Sh((M⊙N)⊙P) → Sh(P⊙(M⊙N))
  AbHom top2 = shadow0_induced(
      BimoduleHom::make(tensor_over(p, mn), tensor_over(pm, n), IntMatrix::identity(p.n() * m.n() * n.n())));
  AbHom bot1 = shadow0_induced(associator(m, n, p));  // Sh((M⊙N)⊙P) → Sh(M⊙(N⊙P))
  AbHom bot2 = shadow0_swap(m, np);                   // → Sh((N⊙P)⊙M)
  AbHom bot3 = shadow0_induced(associator(n, p, m));  // → Sh(N⊙(P⊙M))
  AbHom bot4 = shadow0_swap(n, pm);                   // → Sh((P⊙M)⊙N)
  AbHom bottom = bot4.compose(bot3).compose(bot2).compose(bot1);
  AbHom top = top2.compose(top1);
  r.record("hexagon", top.equal(bottom));
  // unit triangles on the full composite (M⊙N)⊙P, the (A,A)-bimodule the
  // triple always provides
  Bimodule x = tensor_over(mn, p);
  Bimodule ua = unit_bimodule(x.left_alg);
  AbHom th1 = shadow0_swap(x, ua);  // Sh(X⊙U) → Sh(U⊙X)
  AbHom th2 = shadow0_swap(ua, x);  // Sh(U⊙X) → Sh(X⊙U)
  AbHom shr = shadow0_induced(right_unitor(x));
  AbHom shl = shadow0_induced(left_unitor(x));
  r.record("unit triangle", shl.compose(th1).equal(shr));
  r.record("unit rotation squares to identity", th2.compose(th1).equal(AbHom::identity(th1.src)));
  r.record("second unit triangle", shr.compose(th2).equal(shl));
  return r;
}

AbHom trace2cell(const DualPairData& d, const Bimodule& q, const Bimodule& p, const BimoduleHom& f) {
  // f: Q⊙M → M⊙P with Q: (A,A), P: (B,B)
  CheckReport pair = check_dual_pair(d);
  if (!pair.ok) throw std::invalid_argument("trace2cell: dual pair fails: " + pair.detail);
  BimoduleHom step1 = right_unitor_inv(q);                                     // Q → Q⊙U_A
  BimoduleHom step2 = tensor_over_hom(BimoduleHom::identity(q), d.coeval);     // → Q⊙(M⊙N)
  Bimodule qmn = tensor_over(q, tensor_over(d.m, d.n));
  BimoduleHom step3 = BimoduleHom::make(qmn, tensor_over(tensor_over(q, d.m), d.n),
                                        IntMatrix::identity(qmn.n()));         // → (Q⊙M)⊙N
  BimoduleHom step4 = tensor_over_hom(f, BimoduleHom::identity(d.n));          // → (M⊙P)⊙N
  AbHom theta = shadow0_swap(tensor_over(d.m, p), d.n);                        // → Sh(N⊙(M⊙P))
  Bimodule nmp = tensor_over(d.n, tensor_over(d.m, p));
  BimoduleHom step5 = BimoduleHom::make(nmp, tensor_over(tensor_over(d.n, d.m), p),
                                        IntMatrix::identity(nmp.n()));         // → (N⊙M)⊙P
  BimoduleHom step6 = tensor_over_hom(d.eval, BimoduleHom::identity(p));       // → U_B⊙P
  BimoduleHom step7 = left_unitor(p);                                          // → P
  AbHom pre = shadow0_induced(step4.compose(step3).compose(step2).compose(step1));
  AbHom post = shadow0_induced(step7.compose(step6).compose(step5));
  return post.compose(theta).compose(pre);
}

AbHom euler_characteristic(const DualPairData& d) {
  Bimodule ua = unit_bimodule(d.a), ub = unit_bimodule(d.b);
  BimoduleHom f = right_unitor_inv(d.m).compose(left_unitor(d.m));  // U_A⊙M → M⊙U_B
  return trace2cell(d, ua, ub, f);
}

HSResult hattori_stallings(const Algebra& a, const AbHom& phi, const std::vector<std::vector<Element>>& e,
                           const std::vector<std::vector<Element>>& f) {
  if (!is_algebra_map(a, a, phi.m) || !is_isomorphism(phi))
    throw std::invalid_argument("hattori_stallings: phi is not an algebra automorphism");
  size_t r = e.size();
  if (r == 0 || f.size() != r)
    throw std::invalid_argument("hattori_stallings: square matrices of equal size required");
  auto matmul = [&](const std::vector<std::vector<Element>>& x, const std::vector<std::vector<Element>>& y) {
    std::vector<std::vector<Element>> z(r, std::vector<Element>(r, Element::zero(a.group)));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j)
        for (size_t k = 0; k < r; ++k) z[i][j] = z[i][j].add(a.mul(x[i][k], y[k][j]));
    return z;
  };
  auto entries_equal = [&](const std::vector<std::vector<Element>>& x, const std::vector<std::vector<Element>>& y) {
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j)
        if (!a.group.equal(x[i][j].coords, y[i][j].coords)) return false;
    return true;
  };
  if (!entries_equal(matmul(e, e), e)) throw std::invalid_argument("hattori_stallings: e is not idempotent");
  std::vector<std::vector<Element>> ephi(r, std::vector<Element>(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) ephi[i][j] = phi.apply(e[i][j]);
  if (!entries_equal(matmul(matmul(ephi, f), e), f))
    throw std::invalid_argument("hattori_stallings: F does not restrict to a map im(e) → twisted im(e)");
  // HH_0(A; ^φA) = A / <φ(x)y − y·x>
  int n = a.n();
  IntMatrix rel(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Int> xi(n, Int(0)), yj(n, Int(0));
      xi[i] = 1;
      yj[j] = 1;
      std::vector<Int> t1 = a.mult.apply(pure2(phi.apply(xi), yj));
      std::vector<Int> t2 = a.mult.apply(pure2(yj, xi));
      for (int u = 0; u < n; ++u) rel.at(u, i * n + j) = t1[u] - t2[u];
    }
  HSResult out;
  out.hh0 = FGAbGroup::make(n, a.group.rels().hconcat(rel));
  Element tr = Element::zero(a.group);
  for (size_t i = 0; i < r; ++i) tr = tr.add(f[i][i]);
  out.cls = out.hh0.normal_form(tr.coords);
  return out;
}

}  // namespace hhx
