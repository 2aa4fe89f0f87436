#pragma once

// Koszul homology H_i(k; R) of R = S/I with respect to the last k variables,
// almost regular sequences, and the codimension-2 reduction experiment:
// kill x_n, ..., x_3 to reach an Artinian ring in two variables and compare
// the top shifts of the two resolutions.
//
// Sequence orientation is reversed relative to the textbook x_1, x_2, ...:
// for Borel-type monomial ideals the variables x_n, x_{n-1}, ... are the
// ones that behave generically.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "multbound/betti.hpp"
#include "multbound/hilbert.hpp"
#include "multbound/monomial.hpp"

namespace multbound {

struct KoszulStrandTable {
  std::size_t k = 0;
  /// (i, j) -> dim_K H_i(k; R)_j, zero entries omitted
  std::map<std::pair<int, int>, long long> dims;
  int degree_bound = 0;
  /// some homology survives in the top computed degree, so support may continue past it
  bool truncated = false;

  long long operator()(int i, int j) const {
    auto it = dims.find({i, j});
    return it == dims.end() ? 0 : it->second;
  }

  /// M_{i,k}: largest degree with H_i(k;R)_j != 0, or 0 when there is none.
  int top_degree(int i) const {
    int best = 0;
    for (const auto& [key, v] : dims)
      if (key.first == i) best = std::max(best, key.second);
    return best;
  }
};

/// Degree strands 0..D of K(x_{n-k+1}, ..., x_n; S/I), split by multidegree.
inline KoszulStrandTable koszul_strands(const MonomialIdeal& I, std::size_t k, int max_degree) {
  std::size_t n = I.num_vars();
  if (k < 1 || k > n) throw InputError("Koszul sequence length must be in 1..n");
  if (max_degree < 0) throw InputError("degree bound must be non-negative");
  KoszulStrandTable t;
  t.k = k;
  t.degree_bound = max_degree;
  std::vector<std::size_t> vars;
  for (std::size_t v = n - k + 1; v <= n; ++v) vars.push_back(v);
  for (int j = 0; j <= max_degree; ++j)
    for_each_monomial_of_degree(n, j, [&](const ExponentVector& a) {
      auto h = detail::koszul_multidegree_strand(I, a, vars);
      for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i]) t.dims[{static_cast<int>(i), j}] += static_cast<long long>(h[i]);
    });
  for (const auto& [key, v] : t.dims)
    if (key.second == max_degree) t.truncated = true;
  return t;
}

/// Largest t such that x_n, x_{n-1}, ..., x_{n-t+1} is an almost regular
/// sequence on S/I: each x_{n-s} has a finite-length annihilator on
/// S/(I + (x_n, ..., x_{n-s+1})).
inline std::size_t almost_regular_suffix(const MonomialIdeal& I) {
  MonomialIdeal j = I;
  std::size_t t = 0;
  while (j.num_vars() > 0) {
    std::size_t last = j.num_vars();
    if (!j.is_unit() && !finite_length_colon(j, last)) break;
    j = kill_variables(j, {last});
    ++t;
  }
  return t;
}

/// One quotient step R -> R / x R of the reduction chain.
struct QuotientStep {
  std::size_t variable = 0;  // original index of the killed variable
  int dim_before = 0, dim_after = 0;
  long long e_before = 0, e_after = 0;
  long long annihilator_length = 0;
  /// dim(R/xR) = dim(R) - 1 whenever dim(R) > 0
  bool dim_law = true;
  /// e(R) = e(R/xR) if dim(R) > 1; e(R) = e(R/xR) - length(0:x) <= e(R/xR) if dim(R) = 1
  bool multiplicity_law = true;
};

struct ReductionReport {
  bool applicable = false;
  std::string reason;
  std::size_t n = 0;
  int codim = 0;
  std::size_t suffix = 0;
  MonomialIdeal reduced;  // I~ in two variables

  int M1 = 0, M2 = 0;
  int tilde_M1 = 0, tilde_M2 = 0;
  int tilde_M11 = 0, tilde_M22 = 0;
  /// M_{1,n-1} and M_{2,n} from the Koszul strands of R itself
  int M_1_nminus1 = 0, M_2_n = 0;
  long long e = 0, tilde_e = 0;
  std::vector<QuotientStep> steps;

  bool tilde_M1_le_M1 = false;
  bool tilde_M2_le_M2 = false;
  bool tilde_M22_eq_tilde_M11_plus_1 = false;
  bool e_le_tilde_e = false;
  bool tilde_M11_le_M_1_nminus1 = false;
  bool M_1_nminus1_plus_1_le_M_2_n = false;
  bool M_2_n_equals_M2 = false;
  /// H_i vanishes in degree reg + i + 1 for every computed strand row
  bool strand_bounds_vanish = false;

  bool all_hold() const {
    return applicable && tilde_M1_le_M1 && tilde_M2_le_M2 && tilde_M22_eq_tilde_M11_plus_1 && e_le_tilde_e &&
           tilde_M11_le_M_1_nminus1 && M_1_nminus1_plus_1_le_M_2_n && M_2_n_equals_M2 && strand_bounds_vanish &&
           std::all_of(steps.begin(), steps.end(), [](const QuotientStep& s) { return s.dim_law && s.multiplicity_law; });
  }
};

namespace detail {

inline bool rows_vanish_above(const KoszulStrandTable& t, int reg, int max_row) {
  for (int i = 1; i <= max_row; ++i)
    if (reg + i + 1 <= t.degree_bound && t(i, reg + i + 1) != 0) return false;
  return true;
}

}  // namespace detail

inline ReductionReport reduction_report(const MonomialIdeal& I, std::size_t cap = kDefaultOracleCap) {
  ReductionReport r;
  r.n = I.num_vars();
  if (r.n < 2 || I.is_zero() || I.is_unit()) {
    r.reason = "needs a proper nonzero ideal in at least two variables";
    return r;
  }
  HilbertSummary h = summarize(I);
  r.codim = h.codim;
  r.e = h.multiplicity;
  if (h.codim != 2) {
    r.reason = "codimension is " + std::to_string(h.codim) + ", not 2";
    return r;
  }
  r.suffix = almost_regular_suffix(I);
  if (r.suffix + 2 < r.n) {
    r.reason = "x_n, ..., x_3 is not an almost regular sequence (suffix " + std::to_string(r.suffix) + ")";
    return r;
  }

  // quotient chain R_0 = R, R_{s+1} = R_s / x_{n-s} R_s
  MonomialIdeal cur = I;
  HilbertSummary before = h;
  for (std::size_t s = 0; s + 2 < r.n; ++s) {
    std::size_t var = cur.num_vars();
    QuotientStep step;
    step.variable = var;
    step.dim_before = before.dim;
    step.e_before = before.multiplicity;
    step.annihilator_length = annihilator_length(cur, var).value_or(-1);
    cur = kill_variables(cur, {var});
    HilbertSummary after = summarize(cur);
    step.dim_after = after.dim;
    step.e_after = after.multiplicity;
    if (step.dim_before > 0) step.dim_law = step.dim_after == step.dim_before - 1;
    if (step.dim_before > 1) step.multiplicity_law = step.e_before == step.e_after;
    if (step.dim_before == 1)
      step.multiplicity_law = step.annihilator_length >= 0 &&
                              step.e_before == step.e_after - step.annihilator_length && step.e_before <= step.e_after;
    r.steps.push_back(step);
    before = after;
  }
  r.reduced = cur;
  r.tilde_e = before.multiplicity;

  try {
    ResolutionStats big = stats(betti_oracle(I, cap));
    ResolutionStats small = stats(betti_oracle(r.reduced, cap));
    r.M1 = big.M.at(0);
    r.M2 = big.M.at(1);
    r.tilde_M1 = small.M.at(0);
    r.tilde_M2 = small.M.at(1);

    KoszulStrandTable t1 = koszul_strands(r.reduced, 1, small.reg + 3);
    KoszulStrandTable t2 = koszul_strands(r.reduced, 2, small.reg + 3);
    r.tilde_M11 = t1.top_degree(1);
    r.tilde_M22 = t2.top_degree(2);

    KoszulStrandTable full = koszul_strands(I, r.n, big.reg + 3);
    KoszulStrandTable partial = koszul_strands(I, r.n - 1, big.reg + 3);
    r.M_2_n = full.top_degree(2);
    r.M_1_nminus1 = partial.top_degree(1);
    r.strand_bounds_vanish = detail::rows_vanish_above(t1, small.reg, 1) && detail::rows_vanish_above(t2, small.reg, 2) &&
                             detail::rows_vanish_above(full, big.reg, 2) && detail::rows_vanish_above(partial, big.reg, 1);
  } catch (const ResourceError& ex) {
    r.reason = ex.what();
    return r;
  }

  r.applicable = true;
  r.tilde_M1_le_M1 = r.tilde_M1 <= r.M1;
  r.tilde_M2_le_M2 = r.tilde_M2 <= r.M2;
  r.tilde_M22_eq_tilde_M11_plus_1 = r.tilde_M22 == r.tilde_M11 + 1;
  r.e_le_tilde_e = r.e <= r.tilde_e;
  r.tilde_M11_le_M_1_nminus1 = r.tilde_M11 <= r.M_1_nminus1;
  r.M_1_nminus1_plus_1_le_M_2_n = r.M_1_nminus1 + 1 <= r.M_2_n;
  r.M_2_n_equals_M2 = r.M_2_n == r.M2;
  return r;
}

}  // namespace multbound
