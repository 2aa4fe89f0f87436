#pragma once

// Simplicial complexes on [n] stored by facets (vertex sets as bitmasks),
// Alexander duality, the Stanley-Reisner correspondence and polarization.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "multbound/error.hpp"
#include "multbound/monomial.hpp"

namespace multbound {

using VertexSet = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 24;

inline int face_size(VertexSet f) { return std::popcount(f); }

inline VertexSet full_set(std::size_t n) { return n == 32 ? ~VertexSet{0} : ((VertexSet{1} << n) - 1); }

/// Converts 1-based vertex lists to a mask.
inline VertexSet to_mask(const std::vector<std::size_t>& vertices, std::size_t n) {
  VertexSet m = 0;
  for (std::size_t v : vertices) {
    if (v < 1 || v > n) throw InputError("vertex out of range");
    m |= VertexSet{1} << (v - 1);
  }
  return m;
}

inline std::vector<std::size_t> to_vertices(VertexSet m) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; m; ++k, m >>= 1)
    if (m & 1) out.push_back(k + 1);
  return out;
}

/// f_{-1}, f_0, ..., f_dim
struct FVector {
  std::vector<long long> counts;
  /// f_i for i >= -1
  long long operator()(int i) const { return counts.at(static_cast<std::size_t>(i + 1)); }
  bool operator==(const FVector&) const = default;
};

/// Facets never contain one another. An empty facet list is the VOID complex
/// (no faces at all); the single facet {} is the complex {emptyset}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(std::size_t n, std::vector<VertexSet> facets) {
    if (n > kMaxVertices) throw ResourceError("too many vertices for bitmask complexes");
    for (VertexSet f : facets)
      if (f & ~full_set(n)) throw InputError("facet uses a vertex outside [n]");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<VertexSet> maximal;
    for (VertexSet f : facets) {
      bool contained = std::any_of(facets.begin(), facets.end(), [&](VertexSet g) { return g != f && (f & g) == f; });
      if (!contained) maximal.push_back(f);
    }
    return SimplicialComplex(n, std::move(maximal));
  }

  static SimplicialComplex from_facet_lists(std::size_t n, const std::vector<std::vector<std::size_t>>& facets) {
    std::vector<VertexSet> masks;
    for (const auto& f : facets) masks.push_back(to_mask(f, n));
    return from_facets(n, std::move(masks));
  }

  static SimplicialComplex void_complex(std::size_t n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex empty_complex(std::size_t n) { return SimplicialComplex(n, {0}); }
  static SimplicialComplex simplex(std::size_t n) { return SimplicialComplex(n, {full_set(n)}); }

  std::size_t num_vertices() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_simplex() const { return facets_.size() == 1 && facets_.front() == full_set(n_); }
  /// Neither VOID nor the full simplex.
  bool is_proper() const { return !is_void() && !is_simplex(); }

  bool contains(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return (face & f) == face; });
  }

  /// Every singleton {i} is a face (the strict textbook notion).
  bool is_full_vertex_set() const {
    VertexSet u = 0;
    for (VertexSet f : facets_) u |= f;
    return u == full_set(n_);
  }

  /// dim = max facet size - 1; the VOID complex has no dimension.
  int dimension() const {
    if (is_void()) throw InputError("the void complex has no dimension");
    int d = 0;
    for (VertexSet f : facets_) d = std::max(d, face_size(f));
    return d - 1;
  }

  /// All faces, sorted.
  std::vector<VertexSet> faces() const {
    std::unordered_set<VertexSet> seen;
    for (VertexSet f : facets_) {
      VertexSet s = f;
      while (true) {
        seen.insert(s);
        if (s == 0) break;
        s = (s - 1) & f;
      }
    }
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Delta_W = { F in Delta : F subset of W }.
  SimplicialComplex restrict_to(VertexSet w) const {
    if (is_void()) return *this;
    std::vector<VertexSet> fs;
    for (VertexSet f : facets_) fs.push_back(f & w);
    return from_facets(n_, std::move(fs));
  }

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex(std::size_t n, std::vector<VertexSet> facets) : n_(n), facets_(std::move(facets)) {}
  std::size_t n_ = 0;
  std::vector<VertexSet> facets_;
};

/// Minimal subsets of [n] that are not faces.
inline std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& d) {
  if (d.is_void()) return {0};
  std::vector<VertexSet> faces = d.faces();
  std::unordered_set<VertexSet> face_set(faces.begin(), faces.end());
  std::set<VertexSet> out;
  std::size_t n = d.num_vertices();
  for (VertexSet g : faces)
    for (std::size_t v = 0; v < n; ++v) {
      VertexSet bit = VertexSet{1} << v;
      if (g & bit) continue;
      VertexSet c = g | bit;
      if (face_set.count(c)) continue;
      bool minimal = true;
      for (VertexSet rest = c; rest && minimal; rest &= rest - 1) {
        VertexSet w = rest & (~rest + 1);
        if (!face_set.count(c & ~w)) minimal = false;
      }
      if (minimal) out.insert(c);
    }
  return {out.begin(), out.end()};
}

/// Delta^* = { F : [n] \ F not in Delta }. Facets are complements of minimal non-faces.
inline SimplicialComplex alexander_dual(const SimplicialComplex& d) {
  std::vector<VertexSet> facets;
  VertexSet all = full_set(d.num_vertices());
  for (VertexSet m : minimal_nonfaces(d)) facets.push_back(all & ~m);
  return SimplicialComplex::from_facets(d.num_vertices(), std::move(facets));
}

inline ExponentVector mask_monomial(VertexSet m, std::size_t n) {
  std::vector<int> e(n, 0);
  for (std::size_t k = 0; k < n; ++k)
    if (m & (VertexSet{1} << k)) e[k] = 1;
  return ExponentVector(std::move(e));
}

inline VertexSet monomial_mask(const ExponentVector& u) {
  VertexSet m = 0;
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] != 0) m |= VertexSet{1} << k;
  return m;
}

/// I_Delta, generated by x_F over minimal non-faces F.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& d) {
  std::vector<ExponentVector> gens;
  for (VertexSet m : minimal_nonfaces(d)) gens.push_back(mask_monomial(m, d.num_vertices()));
  return MonomialIdeal::minimalize(std::move(gens), d.num_vertices());
}

/// The complex whose Stanley-Reisner ideal is I (I squarefree).
inline SimplicialComplex complex_of_ideal(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw InputError("complex_of_ideal needs a squarefree ideal");
  std::size_t n = I.num_vars();
  if (n > kMaxVertices) throw ResourceError("too many vertices for bitmask complexes");
  if (I.is_unit()) return SimplicialComplex::void_complex(n);
  std::vector<VertexSet> gens;
  for (const auto& g : I.generators()) gens.push_back(monomial_mask(g));
  auto is_face = [&](VertexSet f) {
    return std::none_of(gens.begin(), gens.end(), [&](VertexSet g) { return (g & f) == g; });
  };
  std::vector<VertexSet> facets;
  VertexSet all = full_set(n);
  for (std::uint64_t f = 0; f <= all; ++f) {
    auto face = static_cast<VertexSet>(f);
    if (!is_face(face)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      VertexSet bit = VertexSet{1} << v;
      if (!(face & bit) && is_face(face | bit)) maximal = false;
    }
    if (maximal) facets.push_back(face);
  }
  return SimplicialComplex::from_facets(n, std::move(facets));
}

/// { x_{F^c} : F facet of Delta }, which is G(I_{Delta^*}).
inline std::vector<ExponentVector> facet_duality_generators(const SimplicialComplex& d) {
  if (!d.is_proper()) throw InputError("facet duality needs a proper complex");
  std::vector<ExponentVector> out;
  VertexSet all = full_set(d.num_vertices());
  for (VertexSet f : d.facets()) out.push_back(mask_monomial(all & ~f, d.num_vertices()));
  std::sort(out.begin(), out.end());
  return out;
}

inline FVector f_vector(const SimplicialComplex& d) {
  FVector fv;
  if (d.is_void()) return fv;
  fv.counts.assign(static_cast<std::size_t>(d.dimension() + 2), 0);
  for (VertexSet f : d.faces()) ++fv.counts[static_cast<std::size_t>(face_size(f))];
  return fv;
}

inline int dimension(const SimplicialComplex& d) { return d.dimension(); }

/// f_{d-1}: number of faces of maximal dimension.
inline long long facet_count_top(const SimplicialComplex& d) {
  if (d.is_void()) return 0;
  int top = d.dimension() + 1;
  return std::count_if(d.facets().begin(), d.facets().end(), [&](VertexSet f) { return face_size(f) == top; });
}

struct Polarization {
  MonomialIdeal ideal;
  /// new variable (1-based, position k-1) -> (original variable, copy index), both 1-based
  std::vector<std::pair<std::size_t, int>> variable_map;
};

/// x_i^e -> x_{i,1} ... x_{i,e}. New variables are ordered variable-major.
inline Polarization polarize(const MonomialIdeal& I) {
  std::size_t n = I.num_vars();
  std::vector<int> copies(n + 1, 0);
  for (const auto& g : I.generators())
    for (std::size_t i = 1; i <= n; ++i) copies[i] = std::max(copies[i], g(i));
  Polarization p;
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    offset[i] = p.variable_map.size();
    for (int c = 1; c <= copies[i]; ++c) p.variable_map.emplace_back(i, c);
  }
  std::size_t total = p.variable_map.size();
  std::vector<ExponentVector> gens;
  for (const auto& g : I.generators()) {
    std::vector<int> e(total, 0);
    for (std::size_t i = 1; i <= n; ++i)
      for (int c = 0; c < g(i); ++c) e[offset[i] + static_cast<std::size_t>(c)] = 1;
    gens.emplace_back(std::move(e));
  }
  p.ideal = MonomialIdeal::minimalize(std::move(gens), total);
  return p;
}

}  // namespace multbound
