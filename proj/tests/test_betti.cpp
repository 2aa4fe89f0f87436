#include <gtest/gtest.h>

#include "helpers.hpp"
#include "multbound/betti.hpp"
#include "multbound/campaign.hpp"
#include "multbound/hilbert.hpp"
#include "multbound/simplicial.hpp"

using namespace multbound;
using testing_helpers::complex;
using testing_helpers::ideal;

namespace {

using Entries = std::map<std::pair<int, int>, long long>;

MonomialIdeal variables(std::size_t n, std::size_t k) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 1; i <= k; ++i) gens.push_back(ExponentVector::variable(n, i));
  return MonomialIdeal::minimalize(gens, n);
}

}  // namespace

TEST(BettiOracle, Examples) {
  EXPECT_EQ(betti_oracle(ideal(2, {{1, 0}, {0, 1}})).entries(), (Entries{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}}));
  EXPECT_EQ(betti_oracle(ideal(3, {{1, 1, 0}, {1, 0, 1}})).entries(), (Entries{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}}));
  EXPECT_EQ(betti_oracle(ideal(2, {{2, 0}, {1, 1}, {0, 2}})).entries(), (Entries{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}));
  EXPECT_EQ(betti_oracle(MonomialIdeal::zero(3)).entries(), (Entries{{{0, 0}, 1}}));
  EXPECT_THROW(betti_oracle(MonomialIdeal::unit(2)), InputError);
}

TEST(BettiOracle, KoszulComplexOfVariables) {
  for (std::size_t k = 1; k <= 5; ++k) {
    auto t = betti_oracle(variables(5, k));
    for (int i = 0; i <= static_cast<int>(k); ++i) EXPECT_EQ(t(i, i), binomial(static_cast<long long>(k), i));
    EXPECT_EQ(t.entries().size(), k + 1);
  }
}

TEST(BettiOracle, CapRefusesLargeGeneratorSets) {
  // 20 squarefree generators in 20 variables: neither the generator count nor
  // the exponent box is small.
  std::size_t n = 20;
  std::vector<ExponentVector> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back(ExponentVector::variable(n, i).shifted(i % n + 1, 1));
  auto I = MonomialIdeal::minimalize(gens, n);
  EXPECT_THROW(betti_oracle(I), ResourceError);
}

TEST(BettiTable, ViewConversion) {
  auto r = betti_oracle(ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  auto i = r.as_ideal();
  EXPECT_EQ(i.subject(), BettiSubject::Ideal);
  EXPECT_EQ(i.entries(), (Entries{{{0, 2}, 3}, {{1, 3}, 2}}));
  EXPECT_EQ(i.as_quotient(), r);
  EXPECT_EQ(r.as_quotient(), r);
}

TEST(Hochster, Examples) {
  EXPECT_EQ(betti_hochster(complex(3, {{1, 3}, {2, 3}})).entries(), (Entries{{{0, 0}, 1}, {{1, 2}, 1}}));
  EXPECT_EQ(betti_hochster(SimplicialComplex::simplex(4)).entries(), (Entries{{{0, 0}, 1}}));
}

TEST(Hochster, AgreesWithOracleOnRandomComplexes) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto d = random_complex(rng, static_cast<std::size_t>(rng.between(1, 6)));
    EXPECT_EQ(betti_hochster(d), betti_oracle(stanley_reisner_ideal(d)));
  }
}

TEST(AStableFormula, Examples) {
  auto inf2 = BoundVector::all_infinite(2);
  EXPECT_EQ(betti_a_stable(ideal(2, {{2, 0}, {1, 1}, {0, 2}}), inf2).entries(), (Entries{{{0, 2}, 3}, {{1, 3}, 2}}));
  auto twos = BoundVector::all_finite(3, 2);
  EXPECT_EQ(betti_a_stable(ideal(3, {{1, 1, 0}, {1, 0, 1}}), twos).entries(), (Entries{{{0, 2}, 2}, {{1, 3}, 1}}));
  EXPECT_EQ(betti_a_stable(ideal(3, {{1, 0, 0}}), twos).entries(), (Entries{{{0, 1}, 1}}));
  EXPECT_EQ(betti_a_stable(ideal(3, {{1, 0, 0}}), BoundVector::all_infinite(3)).entries(), (Entries{{{0, 1}, 1}}));
  EXPECT_THROW(betti_a_stable(ideal(2, {{0, 1}}), inf2), InputError);
}

TEST(AStableFormula, AgreesWithOracle) {
  Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(1, 4));
    auto a = random_bound_vector(rng, n);
    auto I = random_a_stable_ideal(rng, n, 3, a);
    EXPECT_EQ(betti_a_stable(I, a), betti_oracle(I).as_ideal()) << I.to_string() << " a=" << a.to_string();
  }
}

TEST(AStableFormula, TripleAgreementOnSquarefreeStronglyStable) {
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(2, 6));
    auto I = random_squarefree_strongly_stable_ideal(rng, n, 3);
    auto oracle_table = betti_oracle(I);
    EXPECT_EQ(betti_hochster(complex_of_ideal(I)), oracle_table);
    EXPECT_EQ(betti_a_stable(I, BoundVector::all_finite(n, 2)).as_quotient(), oracle_table);
  }
}

TEST(Stats, Examples) {
  auto s = stats(betti_oracle(ideal(2, {{1, 0}, {0, 1}})));
  EXPECT_EQ(s.M, (std::vector<int>{1, 2}));
  EXPECT_EQ(s.m, (std::vector<int>{1, 2}));
  EXPECT_TRUE(s.pure);
  EXPECT_EQ(s.pure_degrees, (std::vector<int>{1, 2}));
  EXPECT_EQ(s.reg, 0);
  EXPECT_EQ(s.pdim, 2);
  EXPECT_EQ(s.corner, 2);
  EXPECT_EQ(s.initial_degree, 1);

  s = stats(betti_oracle(ideal(2, {{2, 0}, {1, 1}, {0, 2}})));
  EXPECT_EQ(s.M, (std::vector<int>{2, 3}));
  EXPECT_EQ(s.reg, 1);
  EXPECT_EQ(s.corner, 2);
  EXPECT_TRUE(s.pure);
  EXPECT_EQ(s.pure_degrees, (std::vector<int>{2, 3}));
  EXPECT_EQ(s.ideal_regularity(), ExtendedInt(2));

  s = stats(betti_oracle(ideal(3, {{1, 1, 0}, {0, 0, 2}})));
  EXPECT_EQ(s.M, (std::vector<int>{2, 4}));
  EXPECT_EQ(s.m, (std::vector<int>{2, 4}));
  EXPECT_TRUE(s.quasipure);

  s = stats(betti_oracle(ideal(2, {{1, 0}, {0, 2}})));
  EXPECT_EQ(s.M, (std::vector<int>{2, 3}));
  EXPECT_EQ(s.m, (std::vector<int>{1, 3}));
  EXPECT_FALSE(s.pure);
  EXPECT_TRUE(s.quasipure);
}

TEST(Stats, ZeroIdealIsThePolynomialRing) {
  auto s = stats(betti_oracle(MonomialIdeal::zero(3)));
  EXPECT_EQ(s.pdim, 0);
  EXPECT_EQ(s.reg, 0);
  EXPECT_FALSE(s.initial_degree.has_value());
  EXPECT_EQ(s.ideal_regularity(), ExtendedInt::minus_infinity());
  EXPECT_LT(ExtendedInt::minus_infinity(), ExtendedInt(-1000000));
}

TEST(Stats, InvariantsOnRandomIdeals) {
  Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    auto I = random_monomial_ideal(rng, static_cast<std::size_t>(rng.between(1, 4)), 4, 6);
    auto t = betti_oracle(I);
    auto s = stats(t);
    for (int i = 0; i < s.pdim; ++i) EXPECT_LE(s.m[static_cast<std::size_t>(i)], s.M[static_cast<std::size_t>(i)]);
    EXPECT_EQ(s.initial_degree, I.initial_degree());
    EXPECT_NE(t(s.corner, s.corner + s.reg), 0);
    EXPECT_EQ(t(0, 0), 1);
    // column 0 of the ideal view counts minimal generators by degree
    std::map<int, long long> by_degree;
    for (const auto& g : I.generators()) ++by_degree[g.degree()];
    for (const auto& [d, c] : by_degree) EXPECT_EQ(t.as_ideal()(0, d), c);
  }
}

TEST(RegularityAStable, Examples) {
  EXPECT_EQ(regularity_a_stable(ideal(2, {{1, 0}, {0, 3}}), BoundVector::all_infinite(2)), ExtendedInt(3));
  EXPECT_EQ(stats(betti_oracle(ideal(2, {{1, 0}, {0, 3}}))).ideal_regularity(), ExtendedInt(3));
  EXPECT_EQ(regularity_a_stable(ideal(3, {{1, 1, 0}, {1, 0, 1}}), BoundVector::all_finite(3, 2)), ExtendedInt(2));
  EXPECT_EQ(stats(betti_oracle(ideal(3, {{1, 1, 0}, {1, 0, 1}}))).ideal_regularity(), ExtendedInt(2));
  EXPECT_EQ(regularity_a_stable(ideal(2, {{1, 0}}), BoundVector::all_infinite(2)), ExtendedInt(1));
  EXPECT_EQ(regularity_a_stable(MonomialIdeal::zero(2), BoundVector::all_infinite(2)), ExtendedInt::minus_infinity());
  EXPECT_THROW(regularity_a_stable(ideal(2, {{0, 1}}), BoundVector::all_infinite(2)), InputError);
}

TEST(ComponentwiseLinear, Examples) {
  EXPECT_TRUE(is_componentwise_linear(ideal(2, {{1, 0}, {0, 3}})));
  EXPECT_FALSE(is_componentwise_linear(ideal(2, {{2, 0}, {0, 3}})));
  EXPECT_TRUE(is_componentwise_linear(ideal(3, {{1, 0, 1}})));
  EXPECT_TRUE(is_componentwise_linear(MonomialIdeal::zero(2)));
}

TEST(ComponentwiseLinear, AStableIdealsAre) {
  Rng rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(1, 4));
    auto a = random_bound_vector(rng, n);
    auto I = random_a_stable_ideal(rng, n, 3, a);
    EXPECT_TRUE(is_componentwise_linear(I)) << I.to_string();
    EXPECT_EQ(regularity_a_stable(I, a), stats(betti_oracle(I)).ideal_regularity());
  }
}

TEST(CohenMacaulay, Examples) {
  EXPECT_TRUE(is_cohen_macaulay(ideal(3, {{1, 1, 0}, {0, 0, 2}})));
  EXPECT_FALSE(is_cohen_macaulay(ideal(3, {{1, 1, 0}, {1, 0, 1}})));
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_TRUE(is_cohen_macaulay(variables(4, k)));
}

TEST(CohenMacaulay, GeneratedFamilyIs) {
  Rng rng(36);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = random_cohen_macaulay_ideal(rng, static_cast<std::size_t>(rng.between(1, 4)), 3);
    EXPECT_TRUE(is_cohen_macaulay(I)) << I.to_string();
  }
}

TEST(Duality, ProjectiveDimensionIsDualRegularity) {
  Rng rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    auto d = random_complex(rng, static_cast<std::size_t>(rng.between(1, 6)));
    auto s = stats(betti_oracle(stanley_reisner_ideal(d)));
    auto dual = stats(betti_oracle(stanley_reisner_ideal(alexander_dual(d))));
    EXPECT_EQ(dual.ideal_regularity(), ExtendedInt(s.pdim));
  }
}
