#pragma once

// Graded Betti tables of monomial ideals.
//
// Three independent routes:
//   betti_oracle     Koszul strands of S/I over lcm-lattice multidegrees
//   betti_hochster   reduced homology of vertex-restricted subcomplexes
//   betti_a_stable   closed formula for a-stable ideals
//
// Tables carry an explicit subject: beta_{i,j}(S/I) or beta_{i,j}(I). The two
// are related by beta_{i,j}(S/I) = beta_{i-1,j}(I) for i >= 1.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "multbound/error.hpp"
#include "multbound/hilbert.hpp"
#include "multbound/homology.hpp"
#include "multbound/monomial.hpp"
#include "multbound/simplicial.hpp"

namespace multbound {

enum class BettiSubject { Quotient, Ideal };

/// An integer or minus infinity (the regularity of the zero module).
class ExtendedInt {
 public:
  static ExtendedInt minus_infinity() { return ExtendedInt(); }
  ExtendedInt(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  bool is_finite() const { return v_.has_value(); }
  int value() const { return v_.value(); }

  bool operator==(const ExtendedInt&) const = default;
  std::strong_ordering operator<=>(const ExtendedInt& o) const {
    if (!v_ || !o.v_) return v_.has_value() <=> o.v_.has_value();
    return *v_ <=> *o.v_;
  }

  std::string to_string() const { return v_ ? std::to_string(*v_) : "-inf"; }

 private:
  ExtendedInt() = default;
  std::optional<int> v_;
};

class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (homological index i, internal degree j)

  BettiTable() = default;
  BettiTable(BettiSubject subject, std::size_t n) : subject_(subject), n_(n) {}

  BettiSubject subject() const { return subject_; }
  std::size_t num_vars() const { return n_; }
  const std::map<Key, long long>& entries() const { return entries_; }

  long long operator()(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }
  void add(int i, int j, long long v) {
    if (v < 0) throw InputError("Betti numbers are non-negative");
    if (v == 0) return;
    entries_[{i, j}] += v;
  }
  bool empty() const { return entries_.empty(); }

  BettiTable as_ideal() const {
    if (subject_ == BettiSubject::Ideal) return *this;
    BettiTable t(BettiSubject::Ideal, n_);
    for (const auto& [k, v] : entries_)
      if (k.first >= 1) t.add(k.first - 1, k.second, v);
    return t;
  }
  /// Quotient view; (0,0) = 1 is restored.
  BettiTable as_quotient() const {
    if (subject_ == BettiSubject::Quotient) return *this;
    BettiTable t(BettiSubject::Quotient, n_);
    t.add(0, 0, 1);
    for (const auto& [k, v] : entries_) t.add(k.first + 1, k.second, v);
    return t;
  }

  /// Sum over i of beta_{i,j} for each i, i.e. the total ranks.
  std::map<int, long long> totals() const {
    std::map<int, long long> t;
    for (const auto& [k, v] : entries_) t[k.first] += v;
    return t;
  }

  /// sum_{i,j} (-1)^i beta_{i,j}(S/I) t^j
  IntPolynomial alternating_sum() const {
    BettiTable q = as_quotient();
    IntPolynomial p;
    for (const auto& [k, v] : q.entries_) p = p + IntPolynomial::monomial(k.first % 2 == 0 ? v : -v, k.second);
    return p;
  }

  bool operator==(const BettiTable&) const = default;

 private:
  BettiSubject subject_ = BettiSubject::Quotient;
  std::size_t n_ = 0;
  std::map<Key, long long> entries_;
};

inline constexpr std::size_t kDefaultOracleCap = 18;

namespace detail {

// Homology of the multidegree-a strand of the Koszul complex K(x_v : v in vars; S/I).
// Basis of K_i: (b, F) with F subset of vars, |F| = i, b + 1_F = a, x^b not in I.
// Returns dims H_0..H_{|vars|}.
inline std::vector<std::size_t> koszul_multidegree_strand(const MonomialIdeal& I, const ExponentVector& a,
                                                          const std::vector<std::size_t>& vars) {
  std::vector<std::size_t> usable;
  for (std::size_t v : vars)
    if (a(v) > 0) usable.push_back(v);
  std::size_t k = usable.size();
  std::uint32_t subsets = std::uint32_t{1} << k;
  std::vector<std::vector<std::uint32_t>> basis(k + 1);
  std::vector<std::unordered_map<std::uint32_t, std::size_t>> where(k + 1);
  for (std::uint32_t f = 0; f < subsets; ++f) {
    ExponentVector b = a;
    for (std::size_t t = 0; t < k; ++t)
      if (f & (std::uint32_t{1} << t)) b = b.shifted(usable[t], -1);
    if (I.contains(b)) continue;
    auto s = static_cast<std::size_t>(std::popcount(f));
    where[s][f] = basis[s].size();
    basis[s].push_back(f);
  }
  std::vector<std::size_t> dims;
  std::vector<ExactMatrix> maps;
  for (std::size_t s = 0; s <= k; ++s) dims.push_back(basis[s].size());
  for (std::size_t s = 1; s <= k; ++s) {
    ExactMatrix m(dims[s - 1], dims[s]);
    for (std::size_t col = 0; col < basis[s].size(); ++col) {
      std::uint32_t f = basis[s][col];
      int pos = 0;
      for (std::size_t t = 0; t < k; ++t) {
        std::uint32_t bit = std::uint32_t{1} << t;
        if (!(f & bit)) continue;
        auto it = where[s - 1].find(f & ~bit);
        if (it != where[s - 1].end()) m.set(it->second, col, pos % 2 == 0 ? 1 : -1);
        ++pos;
      }
    }
    maps.push_back(std::move(m));
  }
  return homology_dims(FiniteChainComplex(0, std::move(dims), std::move(maps), false));
}

inline std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& I) {
  std::set<ExponentVector> lattice{ExponentVector(I.num_vars())};
  for (const auto& g : I.generators()) {
    std::vector<ExponentVector> fresh;
    for (const auto& l : lattice) fresh.push_back(l.lcm(g));
    lattice.insert(fresh.begin(), fresh.end());
  }
  return {lattice.begin(), lattice.end()};
}

inline std::vector<std::size_t> all_variables(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

}  // namespace detail

/// beta_{i,j}(S/I) from the definition: Tor^S_i(S/I, K) via the Koszul complex
/// of K resolved against S/I, one lcm-lattice multidegree at a time.
///
/// The lattice has at most min(2^g, prod_i (max exponent_i + 1)) elements; the
/// computation is refused when both exceed 2^cap.
inline BettiTable betti_oracle(const MonomialIdeal& I, std::size_t cap = kDefaultOracleCap) {
  if (I.is_unit()) throw InputError("S/I is zero for the unit ideal");
  std::size_t n = I.num_vars();
  if (I.num_generators() > cap) {
    double box = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      int top = 0;
      for (const auto& g : I.generators()) top = std::max(top, g(i));
      box *= top + 1;
    }
    if (box > static_cast<double>(std::uint64_t{1} << cap))
      throw ResourceError("Betti oracle cap exceeded (" + std::to_string(I.num_generators()) +
                          " generators); use the a-stable closed formula or Hochster's formula");
  }
  BettiTable t(BettiSubject::Quotient, n);
  auto vars = detail::all_variables(n);
  for (const auto& a : detail::lcm_lattice(I)) {
    auto h = detail::koszul_multidegree_strand(I, a, vars);
    for (std::size_t i = 0; i < h.size(); ++i) t.add(static_cast<int>(i), a.degree(), static_cast<long long>(h[i]));
  }
  return t;
}

/// beta_{i,j}(S/I_Delta) = sum_{|W| = j} dim H~_{j-i-1}(Delta_W).
inline BettiTable betti_hochster(const SimplicialComplex& d) {
  std::size_t n = d.num_vertices();
  BettiTable t(BettiSubject::Quotient, n);
  if (d.is_void()) return t;
  VertexSet all = full_set(n);
  for (std::uint64_t w = 0; w <= all; ++w) {
    auto mask = static_cast<VertexSet>(w);
    int size = face_size(mask);
    auto h = reduced_simplicial_homology(d.restrict_to(mask));
    // h[t] is H~_{t-1}
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
      int k = static_cast<int>(idx) - 1;
      int i = size - k - 1;
      if (i >= 0) t.add(i, size, static_cast<long long>(h[idx]));
    }
  }
  return t;
}

/// binom(a, b), zero unless 0 <= b <= a.
inline long long binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

/// beta_{i,i+j}(I) = sum over generators x^u of degree j of binom(m(u) - 1 - l(u), i).
inline BettiTable betti_a_stable(const MonomialIdeal& I, const BoundVector& a) {
  if (!is_a_stable(I, a)) throw InputError("ideal is not a-stable; the closed formula does not apply");
  BettiTable t(BettiSubject::Ideal, I.num_vars());
  for (const auto& u : I.generators()) {
    if (u.is_zero()) throw InputError("the unit ideal has no Betti table");
    int j = u.degree();
    long long top = static_cast<long long>(u.m_index()) - 1 - l_value(u, a);
    for (long long i = 0; i <= top; ++i) t.add(static_cast<int>(i), static_cast<int>(i) + j, binomial(top, i));
  }
  return t;
}

struct ResolutionStats {
  /// M_1..M_p and m_1..m_p, stored 0-based (M[0] is M_1)
  std::vector<int> M;
  std::vector<int> m;
  int pdim = 0;
  /// reg(S/I)
  int reg = 0;
  /// a(I); empty for the zero ideal
  std::optional<int> initial_degree;
  /// b(S/I): largest i with beta_{i, i+reg}(S/I) != 0
  int corner = 0;
  bool pure = true;
  bool quasipure = true;
  std::optional<std::vector<int>> pure_degrees;

  /// reg(I) = reg(S/I) + 1, minus infinity for the zero ideal
  ExtendedInt ideal_regularity() const {
    return initial_degree ? ExtendedInt(reg + 1) : ExtendedInt::minus_infinity();
  }
};

inline ResolutionStats stats(const BettiTable& table) {
  BettiTable t = table.as_quotient();
  ResolutionStats s;
  for (const auto& [k, v] : t.entries()) {
    s.pdim = std::max(s.pdim, k.first);
    s.reg = std::max(s.reg, k.second - k.first);
  }
  s.M.assign(static_cast<std::size_t>(s.pdim), INT32_MIN);
  s.m.assign(static_cast<std::size_t>(s.pdim), INT32_MAX);
  for (const auto& [k, v] : t.entries()) {
    if (k.first == 0) continue;
    auto idx = static_cast<std::size_t>(k.first - 1);
    s.M[idx] = std::max(s.M[idx], k.second);
    s.m[idx] = std::min(s.m[idx], k.second);
  }
  for (int i = 1; i <= s.pdim; ++i)
    if (s.M[static_cast<std::size_t>(i - 1)] == INT32_MIN) throw InputError("Betti table has a gap at index " + std::to_string(i));
  if (s.pdim >= 1) s.initial_degree = s.m[0];
  for (const auto& [k, v] : t.entries())
    if (k.second - k.first == s.reg) s.corner = std::max(s.corner, k.first);
  for (int i = 0; i < s.pdim; ++i)
    if (s.M[static_cast<std::size_t>(i)] != s.m[static_cast<std::size_t>(i)]) s.pure = false;
  for (int i = 1; i < s.pdim; ++i)
    if (s.m[static_cast<std::size_t>(i)] < s.M[static_cast<std::size_t>(i - 1)]) s.quasipure = false;
  if (s.pure) s.pure_degrees = s.M;
  return s;
}

/// reg(I) = max generator degree for a-stable I.
inline ExtendedInt regularity_a_stable(const MonomialIdeal& I, const BoundVector& a) {
  if (!is_a_stable(I, a)) throw InputError("ideal is not a-stable");
  if (I.is_zero()) return ExtendedInt::minus_infinity();
  return I.max_generator_degree();
}

/// reg(I_{<=k}) <= k for every k from a(I) to the top generator degree.
inline bool is_componentwise_linear(const MonomialIdeal& I, std::size_t cap = kDefaultOracleCap) {
  if (I.is_zero()) return true;
  int lo = *I.initial_degree(), hi = I.max_generator_degree();
  for (int k = lo; k <= hi; ++k) {
    MonomialIdeal j = truncate(I, k);
    if (stats(betti_oracle(j, cap)).ideal_regularity() > ExtendedInt(k)) return false;
  }
  return true;
}

/// pdim(S/I) == codim(S/I)
inline bool is_cohen_macaulay(const MonomialIdeal& I, std::size_t cap = kDefaultOracleCap) {
  return stats(betti_oracle(I, cap)).pdim == summarize(I).codim;
}

}  // namespace multbound
