#include "hhx/complex.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

namespace hhx {

long resource_ceiling() {
  static const long v = [] {
    const char* e = std::getenv("HHX_MAX_GENS");
    if (e && *e) {
      long parsed = std::atol(e);
      if (parsed > 0) return parsed;
    }
    return 500000L;
  }();
  return v;
}

void check_resource(long estimated_gens, const std::string& what) {
  if (estimated_gens > resource_ceiling()) {
    std::ostringstream os;
    os << what << ": estimated " << estimated_gens << " generators exceeds ceiling " << resource_ceiling()
       << " (set HHX_MAX_GENS to raise)";
    throw ResourceLimit(os.str());
  }
}

std::vector<std::string> HomologyReport::canonical() const {
  std::vector<std::string> out;
  out.reserve(groups.size());
  for (const FGAbGroup& g : groups) out.push_back(g.canonical_string());
  return out;
}

bool HomologyReport::equal_canonical(const HomologyReport& o) const {
  return max_degree == o.max_degree && canonical() == o.canonical();
}

std::string HomologyReport::to_string(const std::string& label) const {
  std::ostringstream os;
  for (size_t i = 0; i < groups.size(); ++i)
    os << "H_" << i << "(" << label << ") = " << groups[i].canonical_string() << "\n";
  return os.str();
}

struct ChainComplex::Data {
  std::vector<FGAbGroup> levels;
  std::vector<AbHom> diffs;
  uint64_t hash = 0;
  mutable std::mutex mu;
  mutable std::map<int, Subquotient> cache;
};

ChainComplex ChainComplex::make(std::vector<FGAbGroup> levels, std::vector<AbHom> diffs) {
  if (levels.empty()) throw std::invalid_argument("complex: no levels");
  if (diffs.size() + 1 != levels.size()) throw std::invalid_argument("complex: need one differential per step");
  for (size_t q = 0; q < diffs.size(); ++q) {
    if (diffs[q].src.gens() != levels[q + 1].gens() || diffs[q].dst.gens() != levels[q].gens())
      throw std::invalid_argument("complex: differential " + std::to_string(q + 1) + " has wrong shape");
  }
  for (size_t q = 0; q + 1 < diffs.size(); ++q) {
    IntMatrix sq = diffs[q].m.mul(diffs[q + 1].m);
    for (int j = 0; j < sq.cols(); ++j)
      if (!levels[q].is_zero(sq.col(j)))
        throw std::invalid_argument("complex: d" + std::to_string(q + 1) + "∘d" + std::to_string(q + 2) +
                                    " nonzero on generator " + std::to_string(j));
  }
  auto d = std::make_shared<Data>();
  uint64_t h = 0x243f6a8885a308d3ull;
  for (const FGAbGroup& g : levels) h = h * 1099511628211ull ^ g.structural_hash();
  for (const AbHom& f : diffs) h = h * 1099511628211ull ^ f.m.structural_hash();
  d->levels = std::move(levels);
  d->diffs = std::move(diffs);
  d->hash = h;
  ChainComplex c;
  c.d_ = std::move(d);
  return c;
}

int ChainComplex::top() const { return static_cast<int>(d_->levels.size()) - 1; }
const FGAbGroup& ChainComplex::level(int q) const { return d_->levels.at(q); }
const AbHom& ChainComplex::diff(int q) const { return d_->diffs.at(q - 1); }
uint64_t ChainComplex::structural_hash() const { return d_->hash; }

Subquotient ChainComplex::homology(int q) const {
  if (q < 0 || q >= top())
    throw std::invalid_argument("homology degree " + std::to_string(q) + " outside truncation (top " +
                                std::to_string(top()) + ")");
  {
    std::lock_guard<std::mutex> lk(d_->mu);
    auto it = d_->cache.find(q);
    if (it != d_->cache.end()) return it->second;
  }
  AbHom out = q == 0 ? AbHom::zero_hom(d_->levels[0], FGAbGroup()) : d_->diffs[q - 1];
  Subquotient h = homology_at(d_->diffs[q], out);
  std::lock_guard<std::mutex> lk(d_->mu);
  auto [it, inserted] = d_->cache.emplace(q, std::move(h));
  return it->second;
}

HomologyReport ChainComplex::report(int max_degree) const {
  HomologyReport r;
  r.max_degree = max_degree;
  for (int q = 0; q <= max_degree; ++q) r.groups.push_back(homology(q).group);
  return r;
}

struct SimplicialAb::Data {
  std::vector<FGAbGroup> levels;
  std::vector<std::vector<AbHom>> faces;   // faces[q], q >= 1
  std::vector<std::vector<AbHom>> degens;  // degens[q], q <= top-1
};

namespace {

void require_equal_maps(const AbHom& a, const AbHom& b, const std::string& what) {
  if (!a.equal(b)) throw std::logic_error("simplicial identity failed: " + what);
}

}  // namespace

SimplicialAb SimplicialAb::make(std::vector<FGAbGroup> levels, std::vector<std::vector<AbHom>> faces,
                                std::vector<std::vector<AbHom>> degens) {
  int top = static_cast<int>(levels.size()) - 1;
  if (top < 0) throw std::invalid_argument("simplicial: no levels");
  if (static_cast<int>(faces.size()) != top + 1 || static_cast<int>(degens.size()) != std::max(top, 0))
    throw std::invalid_argument("simplicial: wrong face/degeneracy table shape");
  for (int q = 1; q <= top; ++q)
    if (static_cast<int>(faces[q].size()) != q + 1)
      throw std::invalid_argument("simplicial: level " + std::to_string(q) + " needs " + std::to_string(q + 1) +
                                  " faces");
  for (int q = 0; q < top; ++q)
    if (static_cast<int>(degens[q].size()) != q + 1)
      throw std::invalid_argument("simplicial: level " + std::to_string(q) + " needs " + std::to_string(q + 1) +
                                  " degeneracies");

  // simplicial identities, all machine checked on generators
  for (int q = 2; q <= top; ++q)
    for (int j = 1; j <= q; ++j)
      for (int i = 0; i < j; ++i)
        require_equal_maps(faces[q - 1][i].compose(faces[q][j]), faces[q - 1][j - 1].compose(faces[q][i]),
                           "d" + std::to_string(i) + "d" + std::to_string(j) + " at level " + std::to_string(q));
  for (int q = 0; q < top; ++q)
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i <= q + 1; ++i) {
        AbHom lhs = faces[q + 1][i].compose(degens[q][j]);
        std::string tag = "d" + std::to_string(i) + "s" + std::to_string(j) + " at level " + std::to_string(q);
        if (i == j || i == j + 1) {
          require_equal_maps(lhs, AbHom::identity(levels[q]), tag);
        } else if (i < j) {
          require_equal_maps(lhs, degens[q - 1][j - 1].compose(faces[q][i]), tag);
        } else {
          require_equal_maps(lhs, degens[q - 1][j].compose(faces[q][i - 1]), tag);
        }
      }
  for (int q = 0; q + 1 < top; ++q)
    for (int j = 0; j <= q; ++j)
      for (int i = 0; i <= j; ++i)
        require_equal_maps(degens[q + 1][i].compose(degens[q][j]), degens[q + 1][j + 1].compose(degens[q][i]),
                           "s" + std::to_string(i) + "s" + std::to_string(j) + " at level " + std::to_string(q));
  SimplicialAb s;
  auto d = std::make_shared<Data>();
  d->levels = std::move(levels);
  d->faces = std::move(faces);
  d->degens = std::move(degens);
  s.d_ = std::move(d);
  return s;
}

int SimplicialAb::top() const { return static_cast<int>(d_->levels.size()) - 1; }
const FGAbGroup& SimplicialAb::level(int q) const { return d_->levels.at(q); }
const AbHom& SimplicialAb::face(int q, int i) const { return d_->faces.at(q).at(i); }
const AbHom& SimplicialAb::degen(int q, int i) const { return d_->degens.at(q).at(i); }

AbHom SimplicialAb::moore_differential(int q) const {
  AbHom sum = face(q, 0);
  for (int i = 1; i <= q; ++i) {
    if (i % 2)
      sum = sum.sub(face(q, i));
    else
      sum = sum.add(face(q, i));
  }
  return sum;
}

ChainComplex SimplicialAb::moore_complex() const {
  std::vector<AbHom> diffs;
  for (int q = 1; q <= top(); ++q) diffs.push_back(moore_differential(q));
  return ChainComplex::make(d_->levels, std::move(diffs));
}

ChainComplex SimplicialAb::normalized_complex() const {
  int t = top();
  if (t == 0) return ChainComplex::make({level(0)}, {});
  // lattice of each normalized level: common kernel of the first q faces
  std::vector<IntMatrix> basis(t);
  std::vector<FGAbGroup> ngroups(t);
  basis[0] = IntMatrix::identity(level(0).gens());
  ngroups[0] = level(0);
  for (int q = 1; q < t; ++q) {
    IntMatrix stacked = face(q, 0).m;
    IntMatrix rel = level(q - 1).rels();
    for (int i = 1; i < q; ++i) {
      stacked = stacked.vconcat(face(q, i).m);
      IntMatrix z1(rel.rows(), level(q - 1).rels().cols());
      IntMatrix z2(level(q - 1).rels().rows(), rel.cols());
      rel = rel.hconcat(z1).vconcat(z2.hconcat(level(q - 1).rels()));
    }
    IntMatrix combined = stacked.hconcat(rel);
    IntMatrix k = kernel_basis(combined);
    std::vector<int> topr(level(q).gens());
    for (int i = 0; i < level(q).gens(); ++i) topr[i] = i;
    basis[q] = lattice_basis(k.select_rows(topr));
    auto relq = solve_columns(basis[q], level(q).rels());
    if (!relq) throw std::logic_error("normalized: relators escaped level lattice");
    ngroups[q] = FGAbGroup::make(basis[q].cols(), *relq);
  }
  std::vector<AbHom> ndiffs;
  for (int q = 1; q < t; ++q) {
    IntMatrix rhs = moore_differential(q).m.mul(basis[q]);
    auto sol = solve_columns(basis[q - 1].hconcat(level(q - 1).rels()), rhs);
    if (!sol) throw std::logic_error("normalized: differential escaped level lattice");
    std::vector<int> topr(basis[q - 1].cols());
    for (int i = 0; i < basis[q - 1].cols(); ++i) topr[i] = i;
    ndiffs.push_back(AbHom::make(ngroups[q], ngroups[q - 1], sol->select_rows(topr)));
  }
  // top boundary: project the full level-t boundary through the degeneracy
  // splitting idempotent pi = (1 - s_{t-2} d_{t-2}) ... (1 - s_0 d_0) at level t-1
  IntMatrix pi = IntMatrix::identity(level(t - 1).gens());
  for (int i = 0; i <= t - 2; ++i) {
    IntMatrix sd = degen(t - 2, i).m.mul(face(t - 1, i).m);
    pi = IntMatrix::identity(level(t - 1).gens()).sub(sd).mul(pi);
  }
  IntMatrix bt = moore_differential(t).m;
  // guard: the projection must kill every degenerate column
  for (int i = 0; i <= t - 1; ++i) {
    IntMatrix probe = pi.mul(bt.mul(degen(t - 1, i).m));
    for (int j = 0; j < probe.cols(); ++j)
      if (!level(t - 1).is_zero(probe.col(j)))
        throw std::logic_error("normalized: top projection failed to kill degeneracy " + std::to_string(i));
  }
  IntMatrix img = lattice_basis(pi.mul(bt));
  auto sol = solve_columns(basis[t - 1].hconcat(level(t - 1).rels()), img);
  if (!sol) throw std::logic_error("normalized: top boundary escaped level lattice");
  std::vector<int> topr(basis[t - 1].cols());
  for (int i = 0; i < basis[t - 1].cols(); ++i) topr[i] = i;
  FGAbGroup cover = FGAbGroup::free_group(img.cols());
  ndiffs.push_back(AbHom::make(cover, ngroups[t - 1], sol->select_rows(topr)));
  ngroups.push_back(std::move(cover));
  return ChainComplex::make(std::move(ngroups), std::move(ndiffs));
}

HomologyReport SimplicialAb::homology(int max_degree, bool normalized) const {
  if (max_degree > top() - 1)
    throw std::invalid_argument("homology: truncation too shallow for degree " + std::to_string(max_degree));
  ChainComplex c = normalized ? normalized_complex() : moore_complex();
  return c.report(max_degree);
}

struct BisimplicialAb::Data {
  std::vector<std::vector<FGAbGroup>> levels;
  std::vector<std::vector<std::vector<AbHom>>> hfaces, hdegens, vfaces, vdegens;
};

BisimplicialAb BisimplicialAb::make(std::vector<std::vector<FGAbGroup>> levels,
                                    std::vector<std::vector<std::vector<AbHom>>> hfaces,
                                    std::vector<std::vector<std::vector<AbHom>>> hdegens,
                                    std::vector<std::vector<std::vector<AbHom>>> vfaces,
                                    std::vector<std::vector<std::vector<AbHom>>> vdegens) {
  int pt = static_cast<int>(levels.size()) - 1;
  int qt = static_cast<int>(levels.at(0).size()) - 1;
  // rows: fixed q gives a simplicial object in p; columns likewise; the
  // mixed face/degeneracy squares commute. All verified via SimplicialAb
  // construction on rows/columns plus explicit mixed checks here.
  for (int q = 0; q <= qt; ++q) {
    std::vector<FGAbGroup> row;
    std::vector<std::vector<AbHom>> rf(pt + 1), rd(std::max(pt, 0));
    for (int p = 0; p <= pt; ++p) {
      row.push_back(levels[p][q]);
      if (p >= 1) rf[p] = hfaces[p][q];
      if (p < pt) rd[p] = hdegens[p][q];
    }
    SimplicialAb::make(row, rf, rd);
  }
  for (int p = 0; p <= pt; ++p) {
    std::vector<FGAbGroup> colv;
    std::vector<std::vector<AbHom>> cf(qt + 1), cd(std::max(qt, 0));
    for (int q = 0; q <= qt; ++q) {
      colv.push_back(levels[p][q]);
      if (q >= 1) cf[q] = vfaces[p][q];
      if (q < qt) cd[q] = vdegens[p][q];
    }
    SimplicialAb::make(colv, cf, cd);
  }
  for (int p = 1; p <= pt; ++p)
    for (int q = 1; q <= qt; ++q)
      for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
          AbHom a = vfaces[p - 1][q][j].compose(hfaces[p][q][i]);
          AbHom b = hfaces[p][q - 1][i].compose(vfaces[p][q][j]);
          if (!a.equal(b))
            throw std::logic_error("bisimplicial: mixed faces do not commute at (" + std::to_string(p) + "," +
                                   std::to_string(q) + ")");
        }
  for (int p = 0; p < pt; ++p)
    for (int q = 0; q < qt; ++q)
      for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
          AbHom a = vdegens[p + 1][q][j].compose(hdegens[p][q][i]);
          AbHom b = hdegens[p][q + 1][i].compose(vdegens[p][q][j]);
          if (!a.equal(b))
            throw std::logic_error("bisimplicial: mixed degeneracies do not commute at (" + std::to_string(p) +
                                   "," + std::to_string(q) + ")");
        }
  for (int p = 1; p <= pt; ++p)
    for (int q = 0; q < qt; ++q)
      for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
          AbHom a = vdegens[p - 1][q][j].compose(hfaces[p][q][i]);
          AbHom b = hfaces[p][q + 1][i].compose(vdegens[p][q][j]);
          if (!a.equal(b))
            throw std::logic_error("bisimplicial: face/degeneracy square fails at (" + std::to_string(p) + "," +
                                   std::to_string(q) + ")");
        }
  for (int p = 0; p < pt; ++p)
    for (int q = 1; q <= qt; ++q)
      for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
          AbHom a = vfaces[p + 1][q][j].compose(hdegens[p][q][i]);
          AbHom b = hdegens[p][q - 1][i].compose(vfaces[p][q][j]);
          if (!a.equal(b))
            throw std::logic_error("bisimplicial: degeneracy/face square fails at (" + std::to_string(p) + "," +
                                   std::to_string(q) + ")");
        }
  BisimplicialAb b;
  auto d = std::make_shared<Data>();
  d->levels = std::move(levels);
  d->hfaces = std::move(hfaces);
  d->hdegens = std::move(hdegens);
  d->vfaces = std::move(vfaces);
  d->vdegens = std::move(vdegens);
  b.d_ = std::move(d);
  return b;
}

int BisimplicialAb::htop() const { return static_cast<int>(d_->levels.size()) - 1; }
int BisimplicialAb::vtop() const { return static_cast<int>(d_->levels.at(0).size()) - 1; }
const FGAbGroup& BisimplicialAb::level(int p, int q) const { return d_->levels.at(p).at(q); }
const AbHom& BisimplicialAb::hface(int p, int q, int i) const { return d_->hfaces.at(p).at(q).at(i); }
const AbHom& BisimplicialAb::hdegen(int p, int q, int i) const { return d_->hdegens.at(p).at(q).at(i); }
const AbHom& BisimplicialAb::vface(int p, int q, int i) const { return d_->vfaces.at(p).at(q).at(i); }
const AbHom& BisimplicialAb::vdegen(int p, int q, int i) const { return d_->vdegens.at(p).at(q).at(i); }

SimplicialAb BisimplicialAb::diagonal() const {
  int t = std::min(htop(), vtop());
  std::vector<FGAbGroup> levels;
  std::vector<std::vector<AbHom>> faces(t + 1), degens(std::max(t, 0));
  for (int q = 0; q <= t; ++q) levels.push_back(level(q, q));
  for (int q = 1; q <= t; ++q)
    for (int i = 0; i <= q; ++i) faces[q].push_back(hface(q, q - 1, i).compose(vface(q, q, i)));
  for (int q = 0; q < t; ++q)
    for (int i = 0; i <= q; ++i) degens[q].push_back(hdegen(q, q + 1, i).compose(vdegen(q, q, i)));
  return SimplicialAb::make(std::move(levels), std::move(faces), std::move(degens));
}

}  // namespace hhx
