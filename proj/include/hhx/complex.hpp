#pragma once
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hhx/abelian.hpp"

namespace hhx {

// Thrown when an estimated presentation size exceeds the configured ceiling.
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

long resource_ceiling();  // HHX_MAX_GENS override, else default
void check_resource(long estimated_gens, const std::string& what);

struct HomologyReport {
  int max_degree = -1;
  std::vector<FGAbGroup> groups;  // H_0 .. H_max_degree
  std::vector<std::string> canonical() const;
  bool equal_canonical(const HomologyReport& o) const;
  std::string to_string(const std::string& label) const;
};

// Bounded chain complex C_0 <- C_1 <- ... <- C_top. The top level may be an
// auxiliary cover whose image is the top boundary (used by the normalized
// construction); homology is defined for degrees 0..top-1.
class ChainComplex {
public:
  ChainComplex() = default;
  // diffs[q-1]: C_q -> C_{q-1}; square-zero checked with index diagnostics
  static ChainComplex make(std::vector<FGAbGroup> levels, std::vector<AbHom> diffs);

  int top() const;
  const FGAbGroup& level(int q) const;
  const AbHom& diff(int q) const;  // 1 <= q <= top

  Subquotient homology(int q) const;  // memoized, synchronized
  FGAbGroup homology_group(int q) const { return homology(q).group; }
  HomologyReport report(int max_degree) const;
  uint64_t structural_hash() const;

private:
  struct Data;
  std::shared_ptr<Data> d_;
};

// Truncated simplicial abelian group: levels 0..top, all faces/degeneracies.
// Simplicial identities are machine-checked at construction.
class SimplicialAb {
public:
  SimplicialAb() = default;
  static SimplicialAb make(std::vector<FGAbGroup> levels, std::vector<std::vector<AbHom>> faces,
                           std::vector<std::vector<AbHom>> degens);

  int top() const;
  const FGAbGroup& level(int q) const;
  const AbHom& face(int q, int i) const;   // level q -> q-1
  const AbHom& degen(int q, int i) const;  // level q -> q+1

  AbHom moore_differential(int q) const;  // alternating face sum
  ChainComplex moore_complex() const;
  // Degeneracy-free subcomplex as integer lattices; the top level is replaced
  // by a free cover of the projected top boundary so homology through top-1
  // matches the full normalized complex.
  ChainComplex normalized_complex() const;
  HomologyReport homology(int max_degree, bool normalized) const;

private:
  struct Data;
  std::shared_ptr<Data> d_;
};

// Bisimplicial abelian group on bidegrees [0..htop] x [0..vtop].
class BisimplicialAb {
public:
  BisimplicialAb() = default;
  // hface[p][q][i]: (p,q) -> (p-1,q); vface[p][q][i]: (p,q) -> (p,q-1)
  static BisimplicialAb make(std::vector<std::vector<FGAbGroup>> levels,
                             std::vector<std::vector<std::vector<AbHom>>> hfaces,
                             std::vector<std::vector<std::vector<AbHom>>> hdegens,
                             std::vector<std::vector<std::vector<AbHom>>> vfaces,
                             std::vector<std::vector<std::vector<AbHom>>> vdegens);

  int htop() const;
  int vtop() const;
  const FGAbGroup& level(int p, int q) const;
  const AbHom& hface(int p, int q, int i) const;
  const AbHom& hdegen(int p, int q, int i) const;
  const AbHom& vface(int p, int q, int i) const;
  const AbHom& vdegen(int p, int q, int i) const;

  SimplicialAb diagonal() const;  // d_i = d_i^h ∘ d_i^v, s_i likewise

private:
  struct Data;
  std::shared_ptr<Data> d_;
};

}  // namespace hhx
