#pragma once

// JSON forms of ideals, complexes and reports, and the Betti grid text layout.
//
// Ideal:    {"n": 3, "generators": [[2,0,0],[1,1,0],[0,2,0]]}   exponent rows
// Complex:  {"n": 3, "facets": [[1,3],[2,3]]}                    1-based vertices
//           {"n": 3, "facets": null}                             the VOID complex
//
// Betti grid (beta_{i,j}(S/I)), Macaulay2 layout: column i, row j - i, "." for 0:
//
//            0 1 2
//     total: 1 3 2
//         0: 1 . .
//         1: . 3 2

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "multbound/betti.hpp"
#include "multbound/bounds.hpp"
#include "multbound/error.hpp"
#include "multbound/koszul.hpp"
#include "multbound/monomial.hpp"
#include "multbound/simplicial.hpp"

namespace multbound {

using Json = nlohmann::json;

inline std::size_t read_n(const Json& j) {
  if (!j.is_object() || !j.contains("n")) throw InputError("expected an object with field \"n\"");
  const Json& n = j.at("n");
  if (!n.is_number_integer() || n.get<long long>() < 0) throw InputError("\"n\" must be a non-negative integer");
  return n.get<std::size_t>();
}

inline MonomialIdeal ideal_from_json(const Json& j) {
  std::size_t n = read_n(j);
  if (!j.contains("generators") || !j.at("generators").is_array()) throw InputError("\"generators\" must be an array");
  std::vector<ExponentVector> gens;
  for (const Json& row : j.at("generators")) {
    if (!row.is_array() || row.size() != n) throw InputError("generator row has the wrong length");
    std::vector<int> e;
    for (const Json& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("exponents must be non-negative integers");
      e.push_back(v.get<int>());
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::minimalize(std::move(gens), n);
}

inline Json to_json(const MonomialIdeal& I) {
  Json rows = Json::array();
  for (const auto& g : I.generators()) rows.push_back(std::vector<int>(g.exponents().begin(), g.exponents().end()));
  return {{"n", I.num_vars()}, {"generators", rows}};
}

inline SimplicialComplex complex_from_json(const Json& j) {
  std::size_t n = read_n(j);
  if (!j.contains("facets")) throw InputError("missing \"facets\"");
  const Json& f = j.at("facets");
  if (f.is_null()) return SimplicialComplex::void_complex(n);
  if (!f.is_array()) throw InputError("\"facets\" must be an array or null");
  std::vector<std::vector<std::size_t>> facets;
  for (const Json& row : f) {
    if (!row.is_array()) throw InputError("each facet must be an array of vertices");
    std::vector<std::size_t> vs;
    for (const Json& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<std::size_t>() > n)
        throw InputError("facet vertices must lie in 1..n");
      vs.push_back(v.get<std::size_t>());
    }
    facets.push_back(std::move(vs));
  }
  return SimplicialComplex::from_facet_lists(n, facets);
}

inline Json to_json(const SimplicialComplex& d) {
  if (d.is_void()) return {{"n", d.num_vertices()}, {"facets", nullptr}};
  Json facets = Json::array();
  for (VertexSet f : d.facets()) facets.push_back(to_vertices(f));
  return {{"n", d.num_vertices()}, {"facets", facets}};
}

inline std::string betti_grid(const BettiTable& table) {
  BettiTable t = table.as_quotient();
  if (t.empty()) return "(zero module)\n";
  int pdim = 0, lo = 0, hi = 0;
  bool first = true;
  for (const auto& [k, v] : t.entries()) {
    pdim = std::max(pdim, k.first);
    int row = k.second - k.first;
    lo = first ? row : std::min(lo, row);
    hi = first ? row : std::max(hi, row);
    first = false;
  }
  auto totals = t.totals();
  std::vector<std::size_t> width(static_cast<std::size_t>(pdim) + 1, 1);
  for (int i = 0; i <= pdim; ++i) {
    auto& w = width[static_cast<std::size_t>(i)];
    w = std::max(w, std::to_string(i).size());
    w = std::max(w, std::to_string(totals[i]).size());
    for (int r = lo; r <= hi; ++r)
      if (long long v = t(i, i + r)) w = std::max(w, std::to_string(v).size());
  }
  std::size_t label = std::string("total:").size();
  for (int r = lo; r <= hi; ++r) label = std::max(label, std::to_string(r).size() + 1);
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };

  std::ostringstream out;
  out << std::string(label, ' ');
  for (int i = 0; i <= pdim; ++i) out << ' ' << pad(std::to_string(i), width[static_cast<std::size_t>(i)]);
  out << '\n' << pad("total:", label);
  for (int i = 0; i <= pdim; ++i) out << ' ' << pad(std::to_string(totals[i]), width[static_cast<std::size_t>(i)]);
  out << '\n';
  for (int r = lo; r <= hi; ++r) {
    out << pad(std::to_string(r) + ":", label);
    for (int i = 0; i <= pdim; ++i) {
      long long v = t(i, i + r);
      out << ' ' << pad(v ? std::to_string(v) : ".", width[static_cast<std::size_t>(i)]);
    }
    out << '\n';
  }
  return out.str();
}

inline Json rational_json(const Rational& q) {
  return {{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

inline Json to_json(const BoundReport& r) {
  Json j = {{"id", r.id},       {"e", r.e},     {"codim", r.c},       {"pdim", r.p},
            {"reg", r.reg},     {"b", r.corner}, {"M", r.M},          {"m", r.m},
            {"cohen_macaulay", r.cm},          {"upper_bound", rational_json(r.upper_bound)},
            {"weak_bound", r.weak_bound},      {"tightness", rational_json(r.tightness)}};
  j["lower_bound"] = r.lower_bound ? rational_json(*r.lower_bound) : Json(nullptr);
  Json v = Json::object();
  for (const auto& [name, res] : r.verdicts) v[name] = {{"verdict", to_string(res.verdict)}, {"detail", res.detail}};
  j["verdicts"] = v;
  return j;
}

inline Json to_json(const ReductionReport& r) {
  Json j = {{"applicable", r.applicable}, {"n", r.n}, {"codim", r.codim}, {"almost_regular_suffix", r.suffix}};
  if (!r.applicable) {
    j["reason"] = r.reason;
    return j;
  }
  j["reduced_ideal"] = to_json(r.reduced);
  j["M"] = {r.M1, r.M2};
  j["M_tilde"] = {r.tilde_M1, r.tilde_M2};
  j["M_tilde_11"] = r.tilde_M11;
  j["M_tilde_22"] = r.tilde_M22;
  j["M_1_n_minus_1"] = r.M_1_nminus1;
  j["M_2_n"] = r.M_2_n;
  j["e"] = r.e;
  j["e_tilde"] = r.tilde_e;
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"variable", s.variable},
                     {"dim_before", s.dim_before},
                     {"dim_after", s.dim_after},
                     {"e_before", s.e_before},
                     {"e_after", s.e_after},
                     {"annihilator_length", s.annihilator_length},
                     {"dim_law", s.dim_law},
                     {"multiplicity_law", s.multiplicity_law}});
  j["steps"] = steps;
  j["checks"] = {{"M_tilde_1_le_M_1", r.tilde_M1_le_M1},
                 {"M_tilde_2_le_M_2", r.tilde_M2_le_M2},
                 {"M_tilde_22_eq_M_tilde_11_plus_1", r.tilde_M22_eq_tilde_M11_plus_1},
                 {"e_le_e_tilde", r.e_le_tilde_e},
                 {"M_tilde_11_le_M_1_n_minus_1", r.tilde_M11_le_M_1_nminus1},
                 {"M_1_n_minus_1_plus_1_le_M_2_n", r.M_1_nminus1_plus_1_le_M_2_n},
                 {"M_2_n_eq_M_2", r.M_2_n_equals_M2},
                 {"strand_bounds_vanish", r.strand_bounds_vanish}};
  j["all_hold"] = r.all_hold();
  return j;
}

}  // namespace multbound
