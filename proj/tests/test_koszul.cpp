#include <gtest/gtest.h>

#include "helpers.hpp"
#include "multbound/campaign.hpp"
#include "multbound/koszul.hpp"
#include "oracles.hpp"

using namespace multbound;
using testing_helpers::ideal;

namespace {

using Dims = std::map<std::pair<int, int>, long long>;

std::set<std::size_t> suffix(std::size_t n, std::size_t k) {
  std::set<std::size_t> s;
  for (std::size_t v = n - k + 1; v <= n; ++v) s.insert(v);
  return s;
}

}  // namespace

TEST(KoszulStrands, Examples) {
  auto t = koszul_strands(MonomialIdeal::zero(3), 3, 4);
  EXPECT_EQ(t.dims, (Dims{{{0, 0}, 1}}));
  EXPECT_FALSE(t.truncated);

  t = koszul_strands(ideal(2, {{2, 0}, {1, 1}, {0, 2}}), 2, 5);
  EXPECT_EQ(t.dims, (Dims{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}));

  t = koszul_strands(ideal(2, {{2, 0}, {1, 1}}), 1, 6);
  EXPECT_EQ(t(1, 2), 1);
  for (int j = 0; j <= 6; ++j) {
    if (j != 2) {
      EXPECT_EQ(t(1, j), 0) << j;
    }
  }
  EXPECT_EQ(t.top_degree(1), 2);
  EXPECT_EQ(t.top_degree(2), 0);

  EXPECT_THROW(koszul_strands(MonomialIdeal::zero(2), 0, 3), InputError);
  EXPECT_THROW(koszul_strands(MonomialIdeal::zero(2), 3, 3), InputError);
}

TEST(KoszulStrands, FullSequenceComputesBettiNumbers) {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(1, 4));
    auto I = random_monomial_ideal(rng, n, 3, 5);
    auto betti = betti_oracle(I);
    int top = stats(betti).reg + static_cast<int>(n) + 1;
    auto t = koszul_strands(I, n, top);
    EXPECT_EQ(t.dims, betti.entries()) << I.to_string();
  }
}

TEST(KoszulStrands, ZerothHomologyIsTheQuotientByTheSequence) {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(1, 4));
    auto k = static_cast<std::size_t>(rng.between(1, static_cast<int>(n)));
    auto I = random_monomial_ideal(rng, n, 3, 5);
    auto t = koszul_strands(I, k, 5);
    MonomialIdeal J = I;
    for (std::size_t v : suffix(n, k)) J = sum_with_variable(J, v);
    for (int j = 0; j <= 5; ++j) EXPECT_EQ(t(0, j), oracle::hilbert_function(J, j)) << I.to_string() << " k=" << k;
  }
}

TEST(KoszulStrands, FirstHomologyOfOneElementIsTheShiftedAnnihilator) {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(1, 3));
    auto I = random_monomial_ideal(rng, n, 3, 5);
    auto t = koszul_strands(I, 1, 6);
    auto colon = colon_by_variable(I, n);
    for (int j = 1; j <= 6; ++j)
      EXPECT_EQ(t(1, j), oracle::hilbert_function(I, j - 1) - oracle::hilbert_function(colon, j - 1)) << I.to_string();
  }
}

TEST(KoszulStrands, TruncationIsMonotone) {
  Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(2, 4));
    auto I = random_monomial_ideal(rng, n, 3, 5);
    auto k = static_cast<std::size_t>(rng.between(1, static_cast<int>(n)));
    auto small = koszul_strands(I, k, 3), large = koszul_strands(I, k, 6);
    for (const auto& [key, v] : small.dims) EXPECT_EQ(large(key.first, key.second), v);
    for (const auto& [key, v] : large.dims) {
      if (key.second <= 3) {
        EXPECT_EQ(small(key.first, key.second), v);
      }
    }
  }
}

TEST(AlmostRegularSuffix, Examples) {
  EXPECT_EQ(almost_regular_suffix(ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}})), 3u);
  EXPECT_EQ(almost_regular_suffix(ideal(2, {{1, 1}})), 0u);
  EXPECT_EQ(almost_regular_suffix(MonomialIdeal::zero(4)), 4u);
}

TEST(AlmostRegularSuffix, KoszulRowsHaveFiniteSupport) {
  // Along an almost regular suffix, H_i for i >= 1 vanishes in high degrees.
  Rng rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(2, 4));
    auto I = random_borel_codim2_ideal(rng, n, 3);
    std::size_t t = almost_regular_suffix(I);
    if (t == 0) continue;
    int reg = stats(betti_oracle(I)).reg;
    auto table = koszul_strands(I, t, reg + static_cast<int>(t) + 3);
    for (const auto& [key, v] : table.dims) {
      if (key.first >= 1) {
        EXPECT_LE(key.second, reg + key.first) << I.to_string();
      }
    }
  }
}

TEST(ReductionReport, Examples) {
  auto r = reduction_report(ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}}));
  ASSERT_TRUE(r.applicable) << r.reason;
  EXPECT_EQ(r.M1, 2);
  EXPECT_EQ(r.M2, 3);
  EXPECT_EQ(r.tilde_M1, 2);
  EXPECT_EQ(r.tilde_M2, 3);
  EXPECT_EQ(r.tilde_M11, 2);
  EXPECT_EQ(r.tilde_M22, 3);
  EXPECT_EQ(r.e, 3);
  EXPECT_EQ(r.tilde_e, 3);
  EXPECT_TRUE(r.all_hold());

  r = reduction_report(ideal(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}}));
  ASSERT_TRUE(r.applicable) << r.reason;
  EXPECT_TRUE(r.all_hold());
  EXPECT_LE(r.e, r.tilde_e);
  EXPECT_EQ(r.reduced.num_vars(), 2u);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.steps[0].dim_before, 1);
  EXPECT_EQ(r.steps[0].dim_after, 0);

  r = reduction_report(ideal(2, {{1, 0}, {0, 1}}));
  ASSERT_TRUE(r.applicable) << r.reason;
  EXPECT_EQ(r.tilde_M1, r.M1);
  EXPECT_EQ(r.tilde_M2, r.M2);
  EXPECT_TRUE(r.steps.empty());
  EXPECT_TRUE(r.all_hold());
}

TEST(ReductionReport, InapplicableCases) {
  auto r = reduction_report(ideal(3, {{1, 1, 0}}));
  EXPECT_FALSE(r.applicable);
  EXPECT_EQ(r.codim, 1);
  r = reduction_report(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_FALSE(r.applicable);
  // codim 2, but x3 has an infinite annihilator (every power of x2 times x2^2)
  r = reduction_report(ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 1}}));
  EXPECT_EQ(r.codim, 2);
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.reason.empty());
}

TEST(ReductionReport, BorelCodimTwoInstancesSatisfyEveryInequality) {
  Rng rng(46);
  int applicable = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto n = static_cast<std::size_t>(rng.between(2, 4));
    auto I = random_borel_codim2_ideal(rng, n, 3);
    auto r = reduction_report(I);
    if (!r.applicable) continue;
    ++applicable;
    EXPECT_TRUE(r.all_hold()) << I.to_string();
  }
  EXPECT_GT(applicable, 30);
}
