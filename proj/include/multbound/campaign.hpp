#pragma once

// Seeded instance generators and the campaign runner.
//
// Every instance draws its randomness from seed(master, index) only, so a row
// can be replayed alone and the CSV does not depend on the worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "multbound/betti.hpp"
#include "multbound/bounds.hpp"
#include "multbound/error.hpp"
#include "multbound/hilbert.hpp"
#include "multbound/koszul.hpp"
#include "multbound/monomial.hpp"
#include "multbound/simplicial.hpp"

namespace multbound {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t instance_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ index);
}

/// mt19937_64 has a fully specified output sequence; the bounded draws below
/// avoid the implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }
  /// uniform in [lo, hi]
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

/// Uniform monomial of degree d in n variables (stars and bars, Floyd sampling of bar positions).
inline ExponentVector random_monomial(Rng& rng, std::size_t n, int d) {
  if (n == 1) return ExponentVector({d});
  std::uint64_t slots = static_cast<std::uint64_t>(d) + n - 1;
  std::set<std::uint64_t> bars;
  for (std::uint64_t j = slots - (n - 1); j < slots; ++j) {
    std::uint64_t t = rng.below(j + 1);
    if (!bars.insert(t).second) bars.insert(j);
  }
  std::vector<int> e;
  std::int64_t prev = -1;
  for (std::uint64_t b : bars) {
    e.push_back(static_cast<int>(static_cast<std::int64_t>(b) - prev - 1));
    prev = static_cast<std::int64_t>(b);
  }
  e.push_back(static_cast<int>(static_cast<std::int64_t>(slots) - prev - 1));
  return ExponentVector(std::move(e));
}

inline MonomialIdeal random_monomial_ideal(Rng& rng, std::size_t n, int max_degree, int max_gens) {
  int g = rng.between(1, max_gens);
  std::vector<ExponentVector> gens;
  for (int k = 0; k < g; ++k) gens.push_back(random_monomial(rng, n, rng.between(1, max_degree)));
  return MonomialIdeal::minimalize(std::move(gens), n);
}

/// (inf,...), (2,...,2), or entries drawn from {2, 3, inf}.
inline BoundVector random_bound_vector(Rng& rng, std::size_t n) {
  switch (rng.below(3)) {
    case 0: return BoundVector::all_infinite(n);
    case 1: return BoundVector::all_finite(n, 2);
    default: {
      std::vector<Bound> b;
      for (std::size_t i = 0; i < n; ++i) {
        auto pick = rng.below(3);
        b.push_back(pick == 0 ? Bound::finite(2) : pick == 1 ? Bound::finite(3) : Bound::infinity());
      }
      return BoundVector(std::move(b));
    }
  }
}

inline MonomialIdeal random_a_stable_ideal(Rng& rng, std::size_t n, int max_degree, const BoundVector& a) {
  int cap = 0;  // largest degree an a-bounded monomial can have
  for (std::size_t i = 1; i <= n; ++i) cap += a(i).is_infinite() ? max_degree : a(i).value() - 1;
  int top = std::min(max_degree, cap);
  int seeds = rng.between(1, 3);
  std::vector<ExponentVector> gens;
  for (int k = 0; k < seeds; ++k) {
    int d = rng.between(1, top);
    for (int tries = 0; tries < 200; ++tries) {
      ExponentVector u = random_monomial(rng, n, d);
      bool bounded = true;
      for (std::size_t i = 1; i <= n; ++i) bounded = bounded && a(i).admits(u(i));
      if (bounded) {
        gens.push_back(std::move(u));
        break;
      }
    }
  }
  if (gens.empty()) gens.push_back(ExponentVector::variable(n, 1));
  return a_stable_closure(gens, n, a);
}

inline MonomialIdeal random_stable_ideal(Rng& rng, std::size_t n, int max_degree) {
  return random_a_stable_ideal(rng, n, max_degree, BoundVector::all_infinite(n));
}

inline MonomialIdeal random_squarefree_strongly_stable_ideal(Rng& rng, std::size_t n, int max_degree) {
  int top = std::min<int>(max_degree, static_cast<int>(n));
  int seeds = rng.between(1, 3);
  std::vector<ExponentVector> gens;
  for (int k = 0; k < seeds; ++k) {
    int d = rng.between(1, top);
    std::vector<int> e(n, 0);
    for (int placed = 0; placed < d;) {
      auto v = rng.below(n);
      if (e[v] == 0) {
        e[v] = 1;
        ++placed;
      }
    }
    gens.emplace_back(std::move(e));
  }
  return squarefree_strongly_stable_closure(gens, n);
}

/// A proper complex (neither VOID nor the simplex) from 1-4 random facets.
inline SimplicialComplex random_complex(Rng& rng, std::size_t n) {
  if (n == 0) throw InputError("a proper complex needs n >= 1");
  while (true) {
    int k = rng.between(1, 4);
    std::vector<VertexSet> facets;
    for (int f = 0; f < k; ++f) facets.push_back(static_cast<VertexSet>(rng.below(std::uint64_t{1} << n)));
    auto d = SimplicialComplex::from_facets(n, facets);
    if (d.is_proper()) return d;
  }
}

/// Strongly stable closure with a pure power of x_2 and no pure power of x_3..x_n,
/// which pins the codimension at 2.
inline MonomialIdeal random_borel_codim2_ideal(Rng& rng, std::size_t n, int max_degree) {
  if (n < 2) throw InputError("codimension 2 needs n >= 2");
  std::vector<ExponentVector> seeds;
  ExponentVector power(n);
  seeds.push_back(power.shifted(2, rng.between(1, max_degree)));
  int extra = rng.between(0, 2);
  for (int k = 0; k < extra; ++k) {
    ExponentVector u = random_monomial(rng, n, rng.between(1, max_degree));
    auto supp = u.support();
    if (supp.size() == 1 && supp.front() >= 3) continue;
    seeds.push_back(std::move(u));
  }
  return borel_closure(seeds, n);
}

/// Complete intersection of monomials with disjoint supports, or a strongly
/// stable ideal that is Artinian in x_1..x_c (hence Cohen-Macaulay of codim c).
inline MonomialIdeal random_cohen_macaulay_ideal(Rng& rng, std::size_t n, int max_degree) {
  int c = rng.between(1, static_cast<int>(n));
  if (rng.below(2) == 0) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<ExponentVector> gens;
    std::size_t next = 0;
    for (int k = 0; k < c; ++k) {
      std::size_t left = n - next - static_cast<std::size_t>(c - k - 1);
      std::size_t width = 1 + rng.below(std::min<std::size_t>(left, 2));
      ExponentVector g(n);
      for (std::size_t w = 0; w < width; ++w) g = g.shifted(order[next++], rng.between(1, std::max(1, max_degree / 2)));
      gens.push_back(std::move(g));
    }
    return MonomialIdeal::minimalize(std::move(gens), n);
  }
  std::size_t cc = static_cast<std::size_t>(c);
  std::vector<ExponentVector> seeds;
  seeds.push_back(ExponentVector(n).shifted(cc, rng.between(1, max_degree)));
  int extra = rng.between(0, 2);
  for (int k = 0; k < extra; ++k) {
    ExponentVector small = random_monomial(rng, cc, rng.between(1, max_degree));
    std::vector<int> e(small.exponents().begin(), small.exponents().end());
    e.resize(n, 0);
    seeds.emplace_back(std::move(e));
  }
  return borel_closure(seeds, n);
}

enum class Family { Stable, AStable, SquarefreeStronglyStable, RandomMonomial, RandomComplex, BorelCodim2, CohenMacaulay };

inline Family parse_family(const std::string& s) {
  if (s == "stable") return Family::Stable;
  if (s == "a-stable") return Family::AStable;
  if (s == "sqfree-strongly-stable") return Family::SquarefreeStronglyStable;
  if (s == "random-monomial") return Family::RandomMonomial;
  if (s == "random-complex") return Family::RandomComplex;
  if (s == "borel-codim2") return Family::BorelCodim2;
  if (s == "cohen-macaulay") return Family::CohenMacaulay;
  throw InputError("unknown family '" + s + "'");
}

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"c2", "c1", "hm", "weak", "main", "cwl", "dual", "astable", "sss", "reduce"};
  return names;
}

struct CampaignConfig {
  Family family = Family::RandomMonomial;
  std::size_t n = 4;
  int max_degree = 3;
  int max_gens = 8;
  long long count = 1;
  std::uint64_t master_seed = 0;
  /// empty: the family's default set
  std::vector<std::string> checks;
  /// fixed bound vector for the a-stable family; drawn per instance when absent
  std::optional<BoundVector> a;
  std::size_t oracle_cap = kDefaultOracleCap;
  unsigned jobs = 1;
};

inline std::vector<std::string> default_checks(Family f) {
  switch (f) {
    case Family::Stable: return {"c2", "weak", "main", "astable"};
    case Family::AStable: return {"c2", "weak", "astable"};
    case Family::SquarefreeStronglyStable: return {"c2", "weak", "main", "sss"};
    case Family::RandomMonomial: return {"c2", "c1", "hm", "weak", "main"};
    case Family::RandomComplex: return {"dual", "c2", "weak"};
    case Family::BorelCodim2: return {"c2", "weak", "reduce"};
    case Family::CohenMacaulay: return {"c2", "c1", "hm", "weak"};
  }
  return {};
}

struct Instance {
  std::uint64_t seed = 0;
  MonomialIdeal ideal;
  std::optional<SimplicialComplex> complex;
  std::optional<BoundVector> a;
};

inline Instance generate_instance(const CampaignConfig& cfg, long long index) {
  Instance inst;
  inst.seed = instance_seed(cfg.master_seed, static_cast<std::uint64_t>(index));
  Rng rng(inst.seed);
  switch (cfg.family) {
    case Family::Stable:
      inst.a = BoundVector::all_infinite(cfg.n);
      inst.ideal = random_stable_ideal(rng, cfg.n, cfg.max_degree);
      break;
    case Family::AStable:
      inst.a = cfg.a ? *cfg.a : random_bound_vector(rng, cfg.n);
      inst.ideal = random_a_stable_ideal(rng, cfg.n, cfg.max_degree, *inst.a);
      break;
    case Family::SquarefreeStronglyStable:
      inst.ideal = random_squarefree_strongly_stable_ideal(rng, cfg.n, cfg.max_degree);
      break;
    case Family::RandomMonomial:
      inst.ideal = random_monomial_ideal(rng, cfg.n, cfg.max_degree, cfg.max_gens);
      break;
    case Family::RandomComplex:
      inst.complex = random_complex(rng, cfg.n);
      inst.ideal = stanley_reisner_ideal(*inst.complex);
      break;
    case Family::BorelCodim2:
      inst.ideal = random_borel_codim2_ideal(rng, cfg.n, cfg.max_degree);
      break;
    case Family::CohenMacaulay:
      inst.ideal = random_cohen_macaulay_ideal(rng, cfg.n, cfg.max_degree);
      break;
  }
  return inst;
}

struct InstanceOutcome {
  Instance instance;
  std::optional<BoundReport> report;
  std::map<std::string, CheckResult> verdicts;
  bool failed() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second.verdict == Verdict::Fail; });
  }
};

inline InstanceOutcome run_instance(const CampaignConfig& cfg, long long index) {
  InstanceOutcome out;
  out.instance = generate_instance(cfg, index);
  const Instance& inst = out.instance;
  std::vector<std::string> checks = cfg.checks.empty() ? default_checks(cfg.family) : cfg.checks;
  std::optional<IdealAnalysis> an;
  std::string unavailable;
  try {
    an = analyze(inst.ideal, cfg.oracle_cap);
    out.report = bound_report(*an);
  } catch (const ResourceError& ex) {
    unavailable = ex.what();
  }
  for (const auto& name : checks) {
    CheckResult res{Verdict::Inapplicable, unavailable};
    try {
      if (name == "dual") {
        if (inst.complex) res = check_dual_identities(*inst.complex, cfg.oracle_cap).first;
        else res = {Verdict::Inapplicable, "instance is not a complex"};
      } else if (name == "reduce") {
        res = check_reduction(inst.ideal, cfg.oracle_cap);
      } else if (an) {
        if (name == "c2") res = check_conjecture2(*an);
        else if (name == "c1") res = check_conjecture1(*an);
        else if (name == "hm") res = check_huneke_miller(*an);
        else if (name == "weak") res = check_weak_bound(*an);
        else if (name == "main") res = check_main_result_hypothesis(*an);
        else if (name == "cwl") res = check_componentwise_linear(*an, cfg.oracle_cap);
        else if (name == "sss") res = check_squarefree_strongly_stable(*an);
        else if (name == "astable") {
          if (inst.a) res = check_a_stable(*an, *inst.a, cfg.oracle_cap);
          else res = {Verdict::Inapplicable, "no bound vector for this family"};
        }
      }
    } catch (const ResourceError& ex) {
      res = {Verdict::Inapplicable, ex.what()};
    }
    out.verdicts[name] = res;
  }
  if (out.report) out.report->verdicts = out.verdicts;
  return out;
}

inline const char* kCampaignCsvHeader =
    "instance_seed,n,num_gens,max_deg,e,codim,pdim,reg,M_vector,bound_num,bound_den,tightness_num,tightness_den,verdicts";

inline std::string csv_row(const InstanceOutcome& o, const std::vector<std::string>& order) {
  std::ostringstream s;
  const MonomialIdeal& I = o.instance.ideal;
  s << o.instance.seed << ',' << I.num_vars() << ',' << I.num_generators() << ',' << I.max_generator_degree() << ',';
  if (o.report) {
    const BoundReport& r = *o.report;
    std::string mv;
    for (std::size_t k = 0; k < r.M.size(); ++k) mv += (k ? ";" : "") + std::to_string(r.M[k]);
    s << r.e << ',' << r.c << ',' << r.p << ',' << r.reg << ',' << mv << ',' << numerator(r.upper_bound) << ','
      << denominator(r.upper_bound) << ',' << numerator(r.tightness) << ',' << denominator(r.tightness) << ',';
  } else {
    s << ",,,,,,,,,";
  }
  bool first = true;
  for (const auto& name : order) {
    auto it = o.verdicts.find(name);
    if (it == o.verdicts.end()) continue;
    s << (first ? "" : ";") << name << ':' << to_string(it->second.verdict);
    first = false;
  }
  return s.str();
}

struct CampaignResult {
  std::string csv;
  long long failures = 0;
  std::vector<long long> failing_indices;
  std::map<std::string, std::map<Verdict, long long>> tally;
  int exit_code() const { return failures == 0 ? 0 : 1; }
};

inline void validate(const CampaignConfig& cfg) {
  if (cfg.count < 1) throw InputError("count must be at least 1");
  if (cfg.n < 1) throw InputError("n must be at least 1");
  if (cfg.max_degree < 1) throw InputError("max degree must be at least 1");
  if (cfg.max_gens < 1) throw InputError("max generators must be at least 1");
  if (cfg.n > kMaxVertices) throw InputError("n too large");
  if (cfg.family == Family::BorelCodim2 && cfg.n < 2) throw InputError("borel-codim2 needs n >= 2");
  if (cfg.a && cfg.a->size() != cfg.n) throw InputError("bound vector length does not match n");
  for (const auto& c : cfg.checks)
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw InputError("unknown check '" + c + "'");
}

inline CampaignResult run_campaign(const CampaignConfig& cfg) {
  validate(cfg);
  std::vector<std::string> order = cfg.checks.empty() ? default_checks(cfg.family) : cfg.checks;
  auto total = static_cast<std::size_t>(cfg.count);
  std::vector<InstanceOutcome> outcomes(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) outcomes[k] = run_instance(cfg, static_cast<long long>(k));
  };
  unsigned jobs = std::max(1u, cfg.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CampaignResult res;
  std::string csv = std::string(kCampaignCsvHeader) + "\n";
  for (std::size_t k = 0; k < total; ++k) {
    csv += csv_row(outcomes[k], order) + "\n";
    for (const auto& [name, v] : outcomes[k].verdicts) ++res.tally[name][v.verdict];
    if (outcomes[k].failed()) {
      ++res.failures;
      res.failing_indices.push_back(static_cast<long long>(k));
    }
  }
  res.csv = std::move(csv);
  return res;
}

}  // namespace multbound
