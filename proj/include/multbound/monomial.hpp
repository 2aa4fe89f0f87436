#pragma once

// Monomials, monomial ideals and the variable-exchange predicates
// (stable, squarefree strongly stable, a-stable).
//
// Variables are 1-indexed everywhere in the public interface: x_1..x_n.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multbound/error.hpp"

namespace multbound {

/// A point of N^n, read as the monomial x^u.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : exps_(n, 0) {}
  ExponentVector(std::initializer_list<int> exps) : ExponentVector(std::vector<int>(exps)) {}
  explicit ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw InputError("negative exponent");
  }

  std::size_t size() const { return exps_.size(); }
  /// 1-based access.
  int operator()(std::size_t i) const { return exps_[i - 1]; }
  int operator[](std::size_t k) const { return exps_[k]; }
  std::span<const int> exponents() const { return exps_; }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
  bool is_zero() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }
  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
  }

  /// supp(u) as 1-based indices.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < exps_.size(); ++k)
      if (exps_[k] != 0) s.push_back(k + 1);
    return s;
  }

  /// m(u): largest index carrying a nonzero exponent.
  std::size_t m_index() const {
    for (std::size_t k = exps_.size(); k > 0; --k)
      if (exps_[k - 1] != 0) return k;
    throw InputError("m(u) is undefined for the unit monomial");
  }

  bool divides(const ExponentVector& other) const {
    for (std::size_t k = 0; k < exps_.size(); ++k)
      if (exps_[k] > other.exps_[k]) return false;
    return true;
  }

  ExponentVector lcm(const ExponentVector& other) const {
    ExponentVector r(size());
    for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] = std::max(exps_[k], other.exps_[k]);
    return r;
  }

  ExponentVector operator+(const ExponentVector& other) const {
    ExponentVector r(size());
    for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] = exps_[k] + other.exps_[k];
    return r;
  }

  /// Copy with the exponent of x_i shifted by delta (1-based); throws if it goes negative.
  ExponentVector shifted(std::size_t i, int delta) const {
    ExponentVector r = *this;
    r.exps_[i - 1] += delta;
    if (r.exps_[i - 1] < 0) throw InputError("exponent would become negative");
    return r;
  }

  /// x_j * x^u / x_i.
  ExponentVector exchanged(std::size_t j, std::size_t i) const {
    ExponentVector r = *this;
    r.exps_[i - 1] -= 1;
    r.exps_[j - 1] += 1;
    return r;
  }

  static ExponentVector variable(std::size_t n, std::size_t i) {
    ExponentVector r(n);
    r.exps_[i - 1] = 1;
    return r;
  }

  bool operator==(const ExponentVector&) const = default;

  /// Canonical order: total degree, then exponents in descending lex
  /// (so x1^2 < x1x2 < x2^2).
  std::strong_ordering operator<=>(const ExponentVector& other) const {
    if (auto c = degree() <=> other.degree(); c != 0) return c;
    return other.exps_ <=> exps_;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
      if (exps_[k] == 0) continue;
      s += "x" + std::to_string(k + 1);
      if (exps_[k] > 1) s += "^" + std::to_string(exps_[k]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  std::vector<int> exps_;
};

/// One entry of a bound vector a: an integer >= 2 or infinity.
class Bound {
 public:
  static Bound infinity() { return Bound(); }
  static Bound finite(int a) {
    if (a < 2) throw InputError("finite bound entries must be >= 2");
    return Bound(a);
  }

  bool is_infinite() const { return !value_.has_value(); }
  int value() const { return value_.value(); }

  /// u_i < a_i
  bool admits(int e) const { return is_infinite() || e < *value_; }
  /// u_i == a_i - 1
  bool saturated_by(int e) const { return !is_infinite() && e == *value_ - 1; }
  /// u_i < a_i - 1
  bool room_above(int e) const { return is_infinite() || e < *value_ - 1; }

  bool operator==(const Bound&) const = default;

 private:
  Bound() = default;
  explicit Bound(int a) : value_(a) {}
  std::optional<int> value_;
};

class BoundVector {
 public:
  BoundVector() = default;
  explicit BoundVector(std::vector<Bound> entries) : entries_(std::move(entries)) {}

  static BoundVector all_infinite(std::size_t n) { return BoundVector(std::vector<Bound>(n, Bound::infinity())); }
  static BoundVector all_finite(std::size_t n, int a) { return BoundVector(std::vector<Bound>(n, Bound::finite(a))); }

  std::size_t size() const { return entries_.size(); }
  const Bound& operator()(std::size_t i) const { return entries_[i - 1]; }
  bool operator==(const BoundVector&) const = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (k) s += ",";
      s += entries_[k].is_infinite() ? "inf" : std::to_string(entries_[k].value());
    }
    return s;
  }

 private:
  std::vector<Bound> entries_;
};

/// A monomial ideal stored by its minimal generating set G(I) in canonical order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// Removes divisibility-redundant generators and sorts. Idempotent.
  static MonomialIdeal minimalize(std::vector<ExponentVector> raw, std::size_t n) {
    for (const auto& g : raw)
      if (g.size() != n) throw InputError("generator length does not match n");
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    // Canonical order is degree-first, so a divisor always precedes its multiples.
    std::vector<ExponentVector> kept;
    for (auto& g : raw) {
      bool redundant = std::any_of(kept.begin(), kept.end(), [&](const ExponentVector& k) { return k.divides(g); });
      if (!redundant) kept.push_back(std::move(g));
    }
    return MonomialIdeal(n, std::move(kept));
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {ExponentVector(n)}); }

  std::size_t num_vars() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }
  bool is_squarefree() const { return squarefree_; }

  bool contains(const ExponentVector& m) const {
    if (m.size() != n_) throw InputError("monomial length does not match n");
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(m); });
  }

  int max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }
  /// a(I); empty for the zero ideal.
  std::optional<int> initial_degree() const {
    if (gens_.empty()) return std::nullopt;
    return gens_.front().degree();
  }

  bool operator==(const MonomialIdeal&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if (k) s += ", ";
      s += gens_[k].to_string();
    }
    return s + ")";
  }

 private:
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> gens)
      : n_(n), gens_(std::move(gens)),
        squarefree_(std::all_of(gens_.begin(), gens_.end(), [](const ExponentVector& g) { return g.is_squarefree(); })) {}

  std::size_t n_ = 0;
  std::vector<ExponentVector> gens_;
  bool squarefree_ = true;
};

/// Calls f on every monomial of total degree d in n variables (descending lex).
template <typename F>
void for_each_monomial_of_degree(std::size_t n, int d, F&& f) {
  if (n == 0) {
    if (d == 0) f(ExponentVector(0));
    return;
  }
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == n) {
      e[k] = left;
      f(ExponentVector(e));
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, d);
}

inline std::size_t m_index(const ExponentVector& u) { return u.m_index(); }

/// l(u) = #{ i < m(u) : u_i = a_i - 1 }.
inline int l_value(const ExponentVector& u, const BoundVector& a) {
  if (a.size() != u.size()) throw InputError("bound vector length does not match");
  for (std::size_t i = 1; i <= u.size(); ++i)
    if (!a(i).admits(u(i))) throw InputError("exponent vector is not a-bounded");
  std::size_t m = u.m_index();
  int l = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (a(i).saturated_by(u(i))) ++l;
  return l;
}

inline bool is_a_bounded(const MonomialIdeal& I, const BoundVector& a) {
  if (a.size() != I.num_vars()) throw InputError("bound vector length does not match");
  for (const auto& g : I.generators())
    for (std::size_t i = 1; i <= g.size(); ++i)
      if (!a(i).admits(g(i))) return false;
  return true;
}

/// a-bounded, and every generator x^u satisfies x_j x^u / x_{m(u)} in I
/// for j <= m(u) with u_j < a_j - 1.
inline bool is_a_stable(const MonomialIdeal& I, const BoundVector& a) {
  if (!is_a_bounded(I, a)) return false;
  for (const auto& u : I.generators()) {
    if (u.is_zero()) continue;
    std::size_t m = u.m_index();
    for (std::size_t j = 1; j < m; ++j)
      if (a(j).room_above(u(j)) && !I.contains(u.exchanged(j, m))) return false;
  }
  return true;
}

inline bool is_stable(const MonomialIdeal& I) { return is_a_stable(I, BoundVector::all_infinite(I.num_vars())); }

inline bool is_squarefree_stable(const MonomialIdeal& I) {
  return is_a_stable(I, BoundVector::all_finite(I.num_vars(), 2));
}

/// Squarefree, and x_j x_F / x_i in I for every generator x_F, i in F, j < i, j not in F.
inline bool is_squarefree_strongly_stable(const MonomialIdeal& I) {
  if (!I.is_squarefree()) return false;
  for (const auto& u : I.generators())
    for (std::size_t i = 1; i <= u.size(); ++i) {
      if (u(i) == 0) continue;
      for (std::size_t j = 1; j < i; ++j)
        if (u(j) == 0 && !I.contains(u.exchanged(j, i))) return false;
    }
  return true;
}

/// Strongly stable (Borel-fixed in characteristic 0): x_j x^u / x_i in I for i in supp(u), j < i.
inline bool is_strongly_stable(const MonomialIdeal& I) {
  for (const auto& u : I.generators())
    for (std::size_t i = 1; i <= u.size(); ++i) {
      if (u(i) == 0) continue;
      for (std::size_t j = 1; j < i; ++j)
        if (!I.contains(u.exchanged(j, i))) return false;
    }
  return true;
}

/// I_<d>: the ideal generated by the degree-d monomials of I.
inline MonomialIdeal component(const MonomialIdeal& I, int d) {
  if (d < 0) throw InputError("component degree must be non-negative");
  std::set<ExponentVector> out;
  for (const auto& g : I.generators()) {
    int gd = g.degree();
    if (gd > d) continue;
    for_each_monomial_of_degree(I.num_vars(), d - gd, [&](const ExponentVector& m) { out.insert(g + m); });
  }
  return MonomialIdeal::minimalize({out.begin(), out.end()}, I.num_vars());
}

/// I_{<=k}: generated by the generators of degree at most k.
inline MonomialIdeal truncate(const MonomialIdeal& I, int k) {
  if (k < 0) throw InputError("truncation degree must be non-negative");
  std::vector<ExponentVector> keep;
  for (const auto& g : I.generators())
    if (g.degree() <= k) keep.push_back(g);
  return MonomialIdeal::minimalize(std::move(keep), I.num_vars());
}

inline void check_variable(const MonomialIdeal& I, std::size_t i) {
  if (i < 1 || i > I.num_vars()) throw InputError("variable index out of range");
}

/// I : x_i
inline MonomialIdeal colon_by_variable(const MonomialIdeal& I, std::size_t i) {
  check_variable(I, i);
  std::vector<ExponentVector> out;
  out.reserve(I.num_generators());
  for (const auto& g : I.generators()) out.push_back(g(i) > 0 ? g.shifted(i, -1) : g);
  return MonomialIdeal::minimalize(std::move(out), I.num_vars());
}

/// I + (x_i)
inline MonomialIdeal sum_with_variable(const MonomialIdeal& I, std::size_t i) {
  check_variable(I, i);
  std::vector<ExponentVector> out = I.generators();
  out.push_back(ExponentVector::variable(I.num_vars(), i));
  return MonomialIdeal::minimalize(std::move(out), I.num_vars());
}

/// (I + (x_v : v in V)) / (x_v : v in V), re-indexed into the n - |V| surviving variables
/// (in their original relative order).
inline MonomialIdeal kill_variables(const MonomialIdeal& I, const std::set<std::size_t>& killed) {
  for (std::size_t v : killed) check_variable(I, v);
  std::size_t n = I.num_vars();
  std::vector<ExponentVector> out;
  for (const auto& g : I.generators()) {
    bool dies = std::any_of(killed.begin(), killed.end(), [&](std::size_t v) { return g(v) > 0; });
    if (dies) continue;
    std::vector<int> e;
    for (std::size_t i = 1; i <= n; ++i)
      if (!killed.count(i)) e.push_back(g(i));
    out.emplace_back(std::move(e));
  }
  return MonomialIdeal::minimalize(std::move(out), n - killed.size());
}

/// Smallest a-stable ideal containing the seeds: saturates the seed set
/// under x^u -> x_j x^u / x_{m(u)} (j < m(u), u_j < a_j - 1).
inline MonomialIdeal a_stable_closure(const std::vector<ExponentVector>& seeds, std::size_t n, const BoundVector& a) {
  if (a.size() != n) throw InputError("bound vector length does not match");
  std::set<ExponentVector> seen;
  std::vector<ExponentVector> work;
  for (const auto& s : seeds) {
    if (s.size() != n) throw InputError("seed length does not match n");
    for (std::size_t i = 1; i <= n; ++i)
      if (!a(i).admits(s(i))) throw InputError("seed is not a-bounded");
    if (seen.insert(s).second) work.push_back(s);
  }
  while (!work.empty()) {
    ExponentVector u = std::move(work.back());
    work.pop_back();
    if (u.is_zero()) continue;
    std::size_t m = u.m_index();
    for (std::size_t j = 1; j < m; ++j) {
      if (!a(j).room_above(u(j))) continue;
      ExponentVector v = u.exchanged(j, m);
      if (seen.insert(v).second) work.push_back(std::move(v));
    }
  }
  return MonomialIdeal::minimalize({seen.begin(), seen.end()}, n);
}

/// Smallest strongly stable (Borel) ideal containing the seeds.
inline MonomialIdeal borel_closure(const std::vector<ExponentVector>& seeds, std::size_t n) {
  std::set<ExponentVector> seen;
  std::vector<ExponentVector> work;
  for (const auto& s : seeds) {
    if (s.size() != n) throw InputError("seed length does not match n");
    if (seen.insert(s).second) work.push_back(s);
  }
  while (!work.empty()) {
    ExponentVector u = std::move(work.back());
    work.pop_back();
    for (std::size_t i = 2; i <= n; ++i) {
      if (u(i) == 0) continue;
      for (std::size_t j = 1; j < i; ++j) {
        ExponentVector v = u.exchanged(j, i);
        if (seen.insert(v).second) work.push_back(std::move(v));
      }
    }
  }
  return MonomialIdeal::minimalize({seen.begin(), seen.end()}, n);
}

/// Smallest squarefree strongly stable ideal containing squarefree seeds.
inline MonomialIdeal squarefree_strongly_stable_closure(const std::vector<ExponentVector>& seeds, std::size_t n) {
  std::set<ExponentVector> seen;
  std::vector<ExponentVector> work;
  for (const auto& s : seeds) {
    if (s.size() != n) throw InputError("seed length does not match n");
    if (!s.is_squarefree()) throw InputError("seed is not squarefree");
    if (seen.insert(s).second) work.push_back(s);
  }
  while (!work.empty()) {
    ExponentVector u = std::move(work.back());
    work.pop_back();
    for (std::size_t i = 2; i <= n; ++i) {
      if (u(i) == 0) continue;
      for (std::size_t j = 1; j < i; ++j) {
        if (u(j) != 0) continue;
        ExponentVector v = u.exchanged(j, i);
        if (seen.insert(v).second) work.push_back(std::move(v));
      }
    }
  }
  return MonomialIdeal::minimalize({seen.begin(), seen.end()}, n);
}

}  // namespace multbound
