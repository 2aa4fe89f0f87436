#pragma once

// Exact checkers for the multiplicity bounds and duality identities.
// All comparisons are integer cross-multiplications; nothing is rounded.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "multbound/betti.hpp"
#include "multbound/hilbert.hpp"
#include "multbound/koszul.hpp"
#include "multbound/monomial.hpp"
#include "multbound/simplicial.hpp"

namespace multbound {

using Rational = boost::multiprecision::cpp_rational;

enum class Verdict { Pass, Fail, Inapplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

struct CheckResult {
  Verdict verdict = Verdict::Inapplicable;
  std::string detail;
};

inline BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// prod_{i=1}^{k} v_i over a 0-based vector
inline BigInt leading_product(const std::vector<int>& v, int k) {
  BigInt p = 1;
  for (int i = 0; i < k; ++i) p *= v.at(static_cast<std::size_t>(i));
  return p;
}

/// Everything the checks read, computed once per ideal.
struct IdealAnalysis {
  MonomialIdeal ideal;
  BettiTable table;
  ResolutionStats stats;
  HilbertSummary hilbert;
  bool cohen_macaulay = false;
};

inline IdealAnalysis analyze(const MonomialIdeal& I, std::size_t cap = kDefaultOracleCap) {
  IdealAnalysis a;
  a.ideal = I;
  a.table = betti_oracle(I, cap);
  a.stats = stats(a.table);
  a.hilbert = summarize(I);
  a.cohen_macaulay = a.stats.pdim == a.hilbert.codim;
  return a;
}

struct BoundReport {
  std::string id;
  long long e = 0;
  int c = 0;
  int p = 0;
  int reg = 0;
  int corner = 0;
  std::vector<int> M;
  std::vector<int> m;
  /// (prod_{i<=c} M_i) / c!
  Rational upper_bound;
  /// (prod_{i<=p} m_i) / p!, only for Cohen-Macaulay quotients
  std::optional<Rational> lower_bound;
  /// binom(reg + c, c)
  long long weak_bound = 0;
  bool cm = false;
  std::map<std::string, CheckResult> verdicts;
  /// e c! / prod_{i<=c} M_i
  Rational tightness;
};

/// FNV-1a over the canonical generator list; stable across runs and platforms.
inline std::string ideal_id(const MonomialIdeal& I) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(I.num_vars());
  for (const auto& g : I.generators())
    for (int e : g.exponents()) mix(static_cast<std::uint64_t>(e));
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) s[static_cast<std::size_t>(k)] = hex[h & 0xf];
  return s;
}

inline BoundReport bound_report(const IdealAnalysis& a) {
  BoundReport r;
  r.id = ideal_id(a.ideal);
  r.e = a.hilbert.multiplicity;
  r.c = a.hilbert.codim;
  r.p = a.stats.pdim;
  r.reg = a.stats.reg;
  r.corner = a.stats.corner;
  r.M = a.stats.M;
  r.m = a.stats.m;
  r.cm = a.cohen_macaulay;
  r.upper_bound = Rational(leading_product(r.M, r.c), factorial(r.c));
  if (r.cm) r.lower_bound = Rational(leading_product(r.m, r.p), factorial(r.p));
  r.weak_bound = binomial(r.reg + r.c, r.c);
  r.tightness = Rational(BigInt(r.e) * factorial(r.c), leading_product(r.M, r.c));
  return r;
}

/// e(R) <= (prod_{i=1}^{c} M_i) / c!
inline CheckResult check_conjecture2(const IdealAnalysis& a) {
  if (a.ideal.is_zero()) return {Verdict::Inapplicable, "zero ideal"};
  int c = a.hilbert.codim;
  BigInt lhs = BigInt(a.hilbert.multiplicity) * factorial(c);
  BigInt rhs = leading_product(a.stats.M, c);
  bool ok = lhs <= rhs;
  return {ok ? Verdict::Pass : Verdict::Fail, "e*c! = " + lhs.str() + (ok ? " <= " : " > ") + rhs.str() + " = prod M_i"};
}

/// prod m_i / p! <= e(R) <= prod M_i / p!, for Cohen-Macaulay R.
inline CheckResult check_conjecture1(const IdealAnalysis& a) {
  if (a.ideal.is_zero()) return {Verdict::Inapplicable, "zero ideal"};
  if (!a.cohen_macaulay) return {Verdict::Inapplicable, "not Cohen-Macaulay"};
  int p = a.stats.pdim;
  BigInt mid = BigInt(a.hilbert.multiplicity) * factorial(p);
  BigInt lo = leading_product(a.stats.m, p), hi = leading_product(a.stats.M, p);
  bool ok = lo <= mid && mid <= hi;
  return {ok ? Verdict::Pass : Verdict::Fail, lo.str() + " <= e*p! = " + mid.str() + " <= " + hi.str()};
}

/// e(R) p! = prod d_i for Cohen-Macaulay R with a pure resolution.
inline CheckResult check_huneke_miller(const IdealAnalysis& a) {
  if (a.ideal.is_zero()) return {Verdict::Inapplicable, "zero ideal"};
  if (!a.cohen_macaulay) return {Verdict::Inapplicable, "not Cohen-Macaulay"};
  if (!a.stats.pure) return {Verdict::Inapplicable, "resolution is not pure"};
  int p = a.stats.pdim;
  BigInt lhs = BigInt(a.hilbert.multiplicity) * factorial(p);
  BigInt rhs = leading_product(*a.stats.pure_degrees, p);
  return {lhs == rhs ? Verdict::Pass : Verdict::Fail, "e*p! = " + lhs.str() + ", prod d_i = " + rhs.str()};
}

/// c <= b(S/I) and e <= binom(reg + c, c).
inline CheckResult check_weak_bound(const IdealAnalysis& a) {
  if (a.ideal.is_zero()) return {Verdict::Inapplicable, "zero ideal"};
  int c = a.hilbert.codim;
  long long w = binomial(a.stats.reg + c, c);
  bool ok = c <= a.stats.corner && a.hilbert.multiplicity <= w;
  return {ok ? Verdict::Pass : Verdict::Fail, "c = " + std::to_string(c) + ", b = " + std::to_string(a.stats.corner) +
                                                  ", e = " + std::to_string(a.hilbert.multiplicity) +
                                                  ", binom(reg+c,c) = " + std::to_string(w)};
}

/// If M_i = reg + i for i = 1..c, the conjectured bound must hold.
inline CheckResult check_main_result_hypothesis(const IdealAnalysis& a) {
  if (a.ideal.is_zero()) return {Verdict::Inapplicable, "zero ideal"};
  int c = a.hilbert.codim;
  for (int i = 1; i <= c; ++i)
    if (a.stats.M.at(static_cast<std::size_t>(i - 1)) != a.stats.reg + i)
      return {Verdict::Inapplicable, "hypothesis fails: M_" + std::to_string(i) + " != reg + " + std::to_string(i)};
  CheckResult c2 = check_conjecture2(a);
  return {c2.verdict, "hypothesis holds; " + c2.detail};
}

/// Componentwise linear ideals satisfy the conjectured bound.
inline CheckResult check_componentwise_linear(const IdealAnalysis& a, std::size_t cap = kDefaultOracleCap) {
  if (a.ideal.is_zero()) return {Verdict::Inapplicable, "zero ideal"};
  if (!is_componentwise_linear(a.ideal, cap)) return {Verdict::Inapplicable, "not componentwise linear"};
  CheckResult c2 = check_conjecture2(a);
  return {c2.verdict, "componentwise linear; " + c2.detail};
}

/// For a-stable I: closed-formula Betti table equals the oracle, reg(I) = max
/// generator degree, and I is componentwise linear.
inline CheckResult check_a_stable(const IdealAnalysis& a, const BoundVector& bound, std::size_t cap = kDefaultOracleCap) {
  if (!is_a_stable(a.ideal, bound)) return {Verdict::Inapplicable, "not a-stable for a = (" + bound.to_string() + ")"};
  bool formula = betti_a_stable(a.ideal, bound) == a.table.as_ideal();
  bool reg = regularity_a_stable(a.ideal, bound) == a.stats.ideal_regularity();
  bool cwl = is_componentwise_linear(a.ideal, cap);
  bool ok = formula && reg && cwl;
  return {ok ? Verdict::Pass : Verdict::Fail, std::string("formula ") + (formula ? "matches" : "DIFFERS") + ", reg " +
                                                  (reg ? "matches" : "DIFFERS") + ", componentwise linear " +
                                                  (cwl ? "yes" : "NO")};
}

/// For squarefree strongly stable I = I_Delta: oracle = Hochster = closed formula,
/// M_i = reg + i for i <= c, c <= b, and I_{Delta^*} is squarefree strongly stable too.
inline CheckResult check_squarefree_strongly_stable(const IdealAnalysis& a) {
  const MonomialIdeal& I = a.ideal;
  if (!is_squarefree_strongly_stable(I) || I.is_zero()) return {Verdict::Inapplicable, "not squarefree strongly stable"};
  SimplicialComplex d = complex_of_ideal(I);
  bool hochster = betti_hochster(d) == a.table;
  bool formula = betti_a_stable(I, BoundVector::all_finite(I.num_vars(), 2)) == a.table.as_ideal();
  int c = a.hilbert.codim;
  bool shifts = c <= a.stats.corner;
  for (int i = 1; i <= c; ++i) shifts = shifts && a.stats.M.at(static_cast<std::size_t>(i - 1)) == a.stats.reg + i;
  bool dual = is_squarefree_strongly_stable(stanley_reisner_ideal(alexander_dual(d)));
  bool ok = hochster && formula && shifts && dual;
  return {ok ? Verdict::Pass : Verdict::Fail, std::string("hochster ") + (hochster ? "ok" : "DIFFERS") + ", formula " +
                                                  (formula ? "ok" : "DIFFERS") + ", M_i = reg + i " +
                                                  (shifts ? "ok" : "FAILS") + ", dual " + (dual ? "ok" : "NOT stable")};
}

inline CheckResult check_reduction(const MonomialIdeal& I, std::size_t cap = kDefaultOracleCap) {
  ReductionReport r = reduction_report(I, cap);
  if (!r.applicable) return {Verdict::Inapplicable, r.reason};
  return {r.all_hold() ? Verdict::Pass : Verdict::Fail,
          "M~ = (" + std::to_string(r.tilde_M1) + "," + std::to_string(r.tilde_M2) + ") vs M = (" + std::to_string(r.M1) +
              "," + std::to_string(r.M2) + "), M~11 = " + std::to_string(r.tilde_M11) +
              ", M~22 = " + std::to_string(r.tilde_M22) + ", e = " + std::to_string(r.e) + ", e~ = " + std::to_string(r.tilde_e)};
}

struct DualIdentities {
  long long e = 0, beta0_at_a = 0, top_facets = 0;
  int codim = 0, a = 0;
  int pdim = 0;
  ExtendedInt dual_reg = ExtendedInt::minus_infinity();
  bool generators_agree = false;
  bool dim_matches = false;
};

/// e(S/I_D) = beta_{0,a(J)}(J), codim(S/I_D) = a(J), pdim(S/I_D) = reg(J),
/// where J = I_{D^*} is computed both from the dual complex and from facet complements.
inline std::pair<CheckResult, DualIdentities> check_dual_identities(const SimplicialComplex& d,
                                                                     std::size_t cap = kDefaultOracleCap) {
  DualIdentities v;
  if (!d.is_proper()) return {{Verdict::Inapplicable, "complex is VOID or the full simplex"}, v};
  MonomialIdeal I = stanley_reisner_ideal(d);
  MonomialIdeal J = stanley_reisner_ideal(alexander_dual(d));
  v.generators_agree = J.generators() == facet_duality_generators(d);
  HilbertSummary h = summarize(I);
  ResolutionStats si = stats(betti_oracle(I, cap));
  BettiTable tj = betti_oracle(J, cap).as_ideal();
  ResolutionStats sj = stats(tj);
  v.e = h.multiplicity;
  v.codim = h.codim;
  v.top_facets = facet_count_top(d);
  v.a = *sj.initial_degree;
  v.beta0_at_a = tj(0, v.a);
  v.pdim = si.pdim;
  v.dual_reg = sj.ideal_regularity();
  v.dim_matches = h.dim == d.dimension() + 1;
  bool ok = v.generators_agree && v.dim_matches && v.e == v.beta0_at_a && v.e == v.top_facets && v.codim == v.a &&
            ExtendedInt(v.pdim) == v.dual_reg;
  std::string detail = "e = " + std::to_string(v.e) + ", beta_0,a(J) = " + std::to_string(v.beta0_at_a) +
                       ", codim = " + std::to_string(v.codim) + ", a(J) = " + std::to_string(v.a) +
                       ", pdim = " + std::to_string(v.pdim) + ", reg(J) = " + v.dual_reg.to_string();
  return {{ok ? Verdict::Pass : Verdict::Fail, detail}, v};
}

}  // namespace multbound
