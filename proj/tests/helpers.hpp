#pragma once

#include <initializer_list>
#include <vector>

#include "multbound/monomial.hpp"
#include "multbound/simplicial.hpp"

namespace testing_helpers {

inline multbound::MonomialIdeal ideal(std::size_t n, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<multbound::ExponentVector> gens;
  for (auto r : rows) gens.emplace_back(std::vector<int>(r));
  return multbound::MonomialIdeal::minimalize(std::move(gens), n);
}

inline multbound::SimplicialComplex complex(std::size_t n, std::vector<std::vector<std::size_t>> facets) {
  return multbound::SimplicialComplex::from_facet_lists(n, facets);
}

}  // namespace testing_helpers
