#pragma once

// Hilbert series of S/I for monomial I, written as N(t)/(1-t)^n, and the
// invariants read off it: dimension, codimension, multiplicity.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multbound/error.hpp"
#include "multbound/monomial.hpp"

namespace multbound {

/// Dense integer polynomial in t; coefficient k multiplies t^k. No trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> c) : c_(c) { trim(); }
  explicit IntPolynomial(std::vector<long long> c) : c_(std::move(c)) { trim(); }

  static IntPolynomial monomial(long long coeff, int degree) {
    std::vector<long long> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coeff;
    return IntPolynomial(std::move(c));
  }
  static IntPolynomial one() { return IntPolynomial({1}); }

  const std::vector<long long>& coefficients() const { return c_; }
  long long coefficient(int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < c_.size() ? c_[static_cast<std::size_t>(k)] : 0;
  }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  long long at_one() const {
    long long s = 0;
    for (long long v : c_) s += v;
    return s;
  }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return IntPolynomial(std::move(r));
  }
  IntPolynomial operator-(const IntPolynomial& o) const {
    std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] -= o.c_[k];
    return IntPolynomial(std::move(r));
  }
  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t a = 0; a < c_.size(); ++a)
      for (std::size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
    return IntPolynomial(std::move(r));
  }
  /// t^k * this
  IntPolynomial shifted(int k) const {
    if (is_zero()) return {};
    std::vector<long long> r(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(r));
  }

  /// this / (1 - t); requires at_one() == 0.
  IntPolynomial divided_by_one_minus_t() const {
    if (at_one() != 0) throw InputError("polynomial is not divisible by (1 - t)");
    std::vector<long long> q;
    long long run = 0;
    for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
      run += c_[k];
      q.push_back(run);
    }
    return IntPolynomial(std::move(q));
  }

  /// Largest r with (1-t)^r dividing this; the zero polynomial reports max_order.
  int order_at_one(int max_order) const {
    IntPolynomial p = *this;
    int r = 0;
    while (r < max_order && !p.is_zero() && p.at_one() == 0) {
      p = p.divided_by_one_minus_t();
      ++r;
    }
    return p.is_zero() ? max_order : r;
  }

  bool operator==(const IntPolynomial&) const = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      long long v = c_[k];
      if (v == 0) continue;
      if (!s.empty()) s += v < 0 ? " - " : " + ";
      else if (v < 0) s += "-";
      long long a = v < 0 ? -v : v;
      if (k == 0 || a != 1) s += std::to_string(a);
      if (k >= 1) s += "t";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long long> c_;
};

namespace detail {

inline IntPolynomial numerator_rec(const MonomialIdeal& I) {
  if (I.is_zero()) return IntPolynomial::one();
  if (I.is_unit()) return {};
  std::size_t n = I.num_vars();
  std::vector<int> hits(n + 1, 0);
  bool mixed = false;
  for (const auto& g : I.generators()) {
    auto supp = g.support();
    if (supp.size() < 2) continue;
    mixed = true;
    for (std::size_t i : supp) ++hits[i];
  }
  if (!mixed) {
    // pure powers form a regular sequence
    IntPolynomial p = IntPolynomial::one();
    for (const auto& g : I.generators()) p = p * (IntPolynomial::one() - IntPolynomial::monomial(1, g.degree()));
    return p;
  }
  std::size_t pivot = 1;
  for (std::size_t i = 2; i <= n; ++i)
    if (hits[i] > hits[pivot]) pivot = i;
  return numerator_rec(sum_with_variable(I, pivot)) + numerator_rec(colon_by_variable(I, pivot)).shifted(1);
}

}  // namespace detail

/// N(t) with H_{S/I}(t) = N(t) / (1 - t)^n, via N(I) = N(I + (x_i)) + t N(I : x_i)
/// on the variable occurring most often among non-pure-power generators.
inline IntPolynomial hilbert_numerator(const MonomialIdeal& I) { return detail::numerator_rec(I); }

struct HilbertSummary {
  IntPolynomial numerator;
  /// numerator = reduced_numerator * (1 - t)^codim
  IntPolynomial reduced_numerator;
  int dim = 0;
  int codim = 0;
  long long multiplicity = 0;
};

inline HilbertSummary summarize(const MonomialIdeal& I) {
  if (I.is_unit()) throw InputError("S/I is zero for the unit ideal");
  HilbertSummary h;
  h.numerator = hilbert_numerator(I);
  IntPolynomial q = h.numerator;
  int order = 0;
  while (q.at_one() == 0) {
    q = q.divided_by_one_minus_t();
    ++order;
  }
  h.reduced_numerator = q;
  h.codim = order;
  h.dim = static_cast<int>(I.num_vars()) - order;
  h.multiplicity = q.at_one();
  return h;
}

/// Hilbert series numerator (over (1-t)^n) of the annihilator (0 :_{S/I} x_i) = (I : x_i) / I.
inline IntPolynomial annihilator_numerator(const MonomialIdeal& I, std::size_t i) {
  return hilbert_numerator(I) - hilbert_numerator(colon_by_variable(I, i));
}

/// Whether (0 :_{S/I} x_i) has finite length, i.e. its Hilbert series is a polynomial.
inline bool finite_length_colon(const MonomialIdeal& I, std::size_t i) {
  int n = static_cast<int>(I.num_vars());
  return annihilator_numerator(I, i).order_at_one(n) >= n;
}

/// Length of (0 :_{S/I} x_i) when finite.
inline std::optional<long long> annihilator_length(const MonomialIdeal& I, std::size_t i) {
  IntPolynomial p = annihilator_numerator(I, i);
  for (std::size_t k = 0; k < I.num_vars(); ++k) {
    if (p.is_zero()) return 0;
    if (p.at_one() != 0) return std::nullopt;
    p = p.divided_by_one_minus_t();
  }
  return p.at_one();
}

}  // namespace multbound
