#include <gtest/gtest.h>

#include "helpers.hpp"
#include "multbound/betti.hpp"
#include "multbound/campaign.hpp"
#include "multbound/hilbert.hpp"
#include "oracles.hpp"

using namespace multbound;
using testing_helpers::ideal;

namespace {

using Coeffs = std::vector<long long>;

// Coefficients of N(t)/(1-t)^n up to degree d, by expanding the series.
std::vector<long long> series_prefix(const IntPolynomial& num, std::size_t n, int d) {
  std::vector<long long> s(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) s[static_cast<std::size_t>(k)] = num.coefficient(k);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 1; k < s.size(); ++k) s[k] += s[k - 1];
  return s;
}

}  // namespace

TEST(IntPolynomial, Arithmetic) {
  IntPolynomial a({1, -1}), b({1, 1});
  EXPECT_EQ((a * b).coefficients(), (Coeffs{1, 0, -1}));
  EXPECT_EQ((a + b).coefficients(), (Coeffs{2}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.shifted(2).coefficients(), (Coeffs{0, 0, 1, -1}));
  EXPECT_EQ((a * b).divided_by_one_minus_t().coefficients(), (Coeffs{1, 1}));
  EXPECT_EQ((a * a * b).order_at_one(5), 2);
  EXPECT_EQ(b.at_one(), 2);
  EXPECT_THROW(b.divided_by_one_minus_t(), std::logic_error);
}

TEST(HilbertNumerator, Examples) {
  EXPECT_EQ(hilbert_numerator(ideal(2, {{1, 1}})).coefficients(), (Coeffs{1, 0, -1}));
  EXPECT_EQ(hilbert_numerator(ideal(2, {{1, 0}, {0, 1}})).coefficients(), (Coeffs{1, -2, 1}));
  EXPECT_EQ(hilbert_numerator(ideal(2, {{2, 0}, {1, 1}, {0, 2}})).coefficients(), (Coeffs{1, 0, -3, 2}));
  EXPECT_EQ(hilbert_numerator(MonomialIdeal::zero(3)).coefficients(), (Coeffs{1}));
  EXPECT_TRUE(hilbert_numerator(MonomialIdeal::unit(3)).is_zero());
}

TEST(HilbertNumerator, MatchesInclusionExclusion) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(1, 5));
    auto I = random_monomial_ideal(rng, n, rng.between(1, 5), rng.between(1, 10));
    EXPECT_EQ(hilbert_numerator(I).coefficients(), oracle::inclusion_exclusion_numerator(I)) << I.to_string();
  }
}

TEST(HilbertNumerator, ExpandsToStandardMonomialCounts) {
  Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(1, 4));
    auto I = random_monomial_ideal(rng, n, 4, 6);
    auto s = series_prefix(hilbert_numerator(I), n, 7);
    for (int d = 0; d <= 7; ++d) EXPECT_EQ(s[static_cast<std::size_t>(d)], oracle::hilbert_function(I, d)) << I.to_string() << " d=" << d;
  }
}

TEST(HilbertNumerator, EqualsBettiAlternatingSum) {
  Rng rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(1, 4));
    auto I = random_monomial_ideal(rng, n, 4, 6);
    EXPECT_EQ(hilbert_numerator(I).coefficients(), betti_oracle(I).alternating_sum().coefficients()) << I.to_string();
  }
}

TEST(Summarize, Examples) {
  auto h = summarize(ideal(2, {{1, 1}}));
  EXPECT_EQ(h.dim, 1);
  EXPECT_EQ(h.codim, 1);
  EXPECT_EQ(h.reduced_numerator.coefficients(), (Coeffs{1, 1}));
  EXPECT_EQ(h.multiplicity, 2);

  h = summarize(ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(h.dim, 0);
  EXPECT_EQ(h.codim, 2);
  EXPECT_EQ(h.reduced_numerator.coefficients(), (Coeffs{1, 2}));
  EXPECT_EQ(h.multiplicity, 3);

  h = summarize(MonomialIdeal::zero(4));
  EXPECT_EQ(h.dim, 4);
  EXPECT_EQ(h.codim, 0);
  EXPECT_EQ(h.multiplicity, 1);

  EXPECT_THROW(summarize(MonomialIdeal::unit(2)), InputError);
}

TEST(Summarize, ArtinianMultiplicityIsLength) {
  Rng rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(1, 3));
    std::vector<ExponentVector> gens;
    for (std::size_t i = 1; i <= n; ++i) gens.push_back(ExponentVector(n).shifted(i, rng.between(1, 4)));
    for (int k = 0; k < 3; ++k) gens.push_back(random_monomial(rng, n, rng.between(1, 4)));
    auto I = MonomialIdeal::minimalize(gens, n);
    long long length = 0;
    for (int d = 0; d <= 12; ++d) length += oracle::hilbert_function(I, d);
    auto h = summarize(I);
    EXPECT_EQ(h.dim, 0);
    EXPECT_EQ(h.multiplicity, length);
  }
}

TEST(Summarize, NumeratorFactorsThroughReducedNumerator) {
  Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(1, 5));
    auto I = random_monomial_ideal(rng, n, 4, 8);
    auto h = summarize(I);
    IntPolynomial rebuilt = h.reduced_numerator;
    for (int k = 0; k < h.codim; ++k) rebuilt = rebuilt * IntPolynomial({1, -1});
    EXPECT_EQ(rebuilt, h.numerator);
    EXPECT_NE(h.reduced_numerator.at_one(), 0);
    EXPECT_GE(h.multiplicity, 1);
    EXPECT_EQ(h.codim + h.dim, static_cast<int>(n));
  }
}

TEST(FiniteLengthColon, Examples) {
  EXPECT_TRUE(finite_length_colon(ideal(2, {{2, 0}, {1, 1}}), 2));
  EXPECT_EQ(annihilator_length(ideal(2, {{2, 0}, {1, 1}}), 2), 1);
  EXPECT_FALSE(finite_length_colon(ideal(2, {{1, 1}}), 2));
  EXPECT_EQ(annihilator_length(ideal(2, {{1, 1}}), 2), std::nullopt);
  EXPECT_TRUE(finite_length_colon(MonomialIdeal::zero(3), 1));
  EXPECT_EQ(annihilator_length(MonomialIdeal::zero(3), 1), 0);
}

TEST(FiniteLengthColon, AgreesWithDegreewiseAnnihilatorCount) {
  // (I : x_i)/I counted degreewise; finite length iff it vanishes well past
  // every generator degree.
  Rng rng(26);
  for (int trial = 0; trial < 60; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(1, 3));
    auto I = random_monomial_ideal(rng, n, 3, 5);
    auto i = static_cast<std::size_t>(rng.between(1, static_cast<int>(n)));
    auto colon = colon_by_variable(I, i);
    long long total = 0, tail = 0;
    for (int d = 0; d <= 14; ++d) {
      long long here = oracle::hilbert_function(I, d) - oracle::hilbert_function(colon, d);
      total += here;
      if (d >= 10) tail += here;
    }
    bool finite = finite_length_colon(I, i);
    EXPECT_EQ(finite, tail == 0) << I.to_string() << " x" << i;
    if (finite) {
      EXPECT_EQ(annihilator_length(I, i), total);
    }
  }
}

TEST(QuotientLaws, DimensionDropsAndMultiplicityBehaves) {
  Rng rng(27);
  int exercised = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(2, 4));
    auto I = random_borel_codim2_ideal(rng, n, 3);
    if (!finite_length_colon(I, n)) continue;
    auto before = summarize(I);
    auto after = summarize(sum_with_variable(I, n));
    long long len = *annihilator_length(I, n);
    if (before.dim > 0) {
      ++exercised;
      EXPECT_EQ(after.dim, before.dim - 1);
      if (before.dim > 1) {
        EXPECT_EQ(before.multiplicity, after.multiplicity);
      }
      if (before.dim == 1) {
        EXPECT_EQ(before.multiplicity, after.multiplicity - len);
      }
    }
  }
  EXPECT_GT(exercised, 20);
}
