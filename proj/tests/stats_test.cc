// Copyright 2026 The ExpertAudit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "expertaudit/stats.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "support/oracles.h"

namespace expertaudit::stats {
namespace {

using testing::AllEqual;
using testing::OracleGini;
using testing::OracleKruskalWallis;
using testing::OracleSpearman;
using testing::OracleSpearmanNoTies;
using testing::RandomValues;
using V = std::vector<double>;

double Mean(std::span<const double> s) {
  return std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
}

// Gini

TEST(GiniTest, PerfectEqualityIsZero) { EXPECT_DOUBLE_EQ(Gini(V{5, 5, 5, 5}), 0.0); }

TEST(GiniTest, SingleHolderOfFour) { EXPECT_NEAR(Gini(V{1, 0, 0, 0}), 0.75, 1e-15); }

TEST(GiniTest, ZeroMeanIsAnError) { EXPECT_THROW(Gini(V{0, 0, 0}), std::domain_error); }

TEST(GiniTest, RejectsEmptyNegativeAndNonFinite) {
  EXPECT_THROW(Gini(V{}), std::domain_error);
  EXPECT_THROW(Gini(V{1, -1, 3}), std::domain_error);
  EXPECT_THROW(Gini(V{1, std::numeric_limits<double>::quiet_NaN()}), std::domain_error);
}

TEST(GiniTest, MatchesPairwiseOracle) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    V x = RandomValues(rng, 1 + rng() % 200, t % 2);
    if (std::accumulate(x.begin(), x.end(), 0.0) == 0) x[0] = 1;
    ASSERT_NEAR(Gini(x), OracleGini(x), 1e-9);
  }
}

TEST(GiniTest, ScaleAndPermutationInvariantAndBounded) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    V x = RandomValues(rng, 2 + rng() % 150, t % 2);
    if (std::accumulate(x.begin(), x.end(), 0.0) == 0) x[0] = 1;
    double g = Gini(x);
    V scaled = x;
    for (double &v : scaled) v *= 0.37 + t;
    V shuffled = x;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_NEAR(Gini(scaled), g, 1e-12);
    EXPECT_NEAR(Gini(shuffled), g, 1e-12);
    EXPECT_GE(g, 0.0);
    EXPECT_LE(g, 1.0 - 1.0 / static_cast<double>(x.size()) + 1e-12);
  }
}

// Spearman

TEST(SpearmanTest, MonotoneAndReversed) {
  EXPECT_DOUBLE_EQ(Spearman(V{1, 2, 3}, V{10, 20, 30}), 1.0);
  EXPECT_DOUBLE_EQ(Spearman(V{1, 2, 3}, V{3, 2, 1}), -1.0);
}

TEST(SpearmanTest, HandComputedFourPairs) {
  EXPECT_NEAR(Spearman(V{1, 2, 3, 4}, V{2, 1, 4, 3}), 0.6, 1e-15);
}

TEST(SpearmanTest, Errors) {
  EXPECT_THROW(Spearman(V{1, 2}, V{1, 2, 3}), std::domain_error);
  EXPECT_THROW(Spearman(V{1}, V{1}), std::domain_error);
  EXPECT_THROW(Spearman(V{2, 2, 2}, V{1, 2, 3}), std::domain_error);
}

TEST(SpearmanTest, AverageRanksForTies) {
  EXPECT_EQ(AverageRanks(V{10, 20, 20, 30}), (V{1, 2.5, 2.5, 4}));
  EXPECT_EQ(AverageRanks(V{3, 3, 3}), (V{2, 2, 2}));
}

TEST(SpearmanTest, MatchesOraclesWithAndWithoutTies) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    bool ties = t % 2;
    size_t n = 3 + rng() % 198;
    V x = RandomValues(rng, n, ties), y = RandomValues(rng, n, ties);
    if (AllEqual(x) || AllEqual(y)) continue;
    ASSERT_NEAR(Spearman(x, y), OracleSpearman(x, y), 1e-9);
    if (!ties) ASSERT_NEAR(Spearman(x, y), OracleSpearmanNoTies(x, y), 1e-9);
  }
}

TEST(SpearmanTest, MonotoneTransformAndReversal) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    size_t n = 3 + rng() % 100;
    V x = RandomValues(rng, n, false), y = RandomValues(rng, n, false);
    double rho = Spearman(x, y);
    V fx = x, neg = x;
    for (double &v : fx) v = std::log1p(v) * 3 + 1;
    for (double &v : neg) v = -v;
    EXPECT_NEAR(Spearman(fx, y), rho, 1e-12);
    EXPECT_NEAR(Spearman(neg, y), -rho, 1e-12);
  }
}

TEST(SpearmanTest, TestCarriesSizeAndPValue) {
  CorrelationTest perfect = SpearmanTest(V{1, 2, 3, 4, 5}, V{5, 4, 3, 2, 1});
  EXPECT_EQ(perfect.n, 5u);
  EXPECT_DOUBLE_EQ(perfect.rho, -1.0);
  EXPECT_DOUBLE_EQ(perfect.p_two_sided, 0.0);
  CorrelationTest weak = SpearmanTest(V{1, 2, 3, 4}, V{2, 1, 4, 3});
  EXPECT_GT(weak.p_two_sided, 0.0);
  EXPECT_LE(weak.p_two_sided, 1.0);
}

// Kruskal-Wallis

TEST(KruskalWallisTest, HandComputedNoTies) {
  KruskalWallisResult r = KruskalWallis({{1, 2, 3}, {4, 5, 6}});
  EXPECT_NEAR(r.h, 3.857, 1e-3);
  EXPECT_NEAR(r.h, 27.0 / 7.0, 1e-12);
  EXPECT_EQ(r.df, 1);
  EXPECT_EQ(r.n, 6u);
  EXPECT_NEAR(r.p, ChiSquareSurvival(27.0 / 7.0, 1), 1e-15);
}

TEST(KruskalWallisTest, IdenticalGroupsGiveZero) {
  EXPECT_NEAR(KruskalWallis({{1, 2}, {1, 2}}).h, 0.0, 1e-12);
}

TEST(KruskalWallisTest, Errors) {
  EXPECT_THROW(KruskalWallis({{7, 7}, {7, 7}}), std::domain_error);
  EXPECT_THROW(KruskalWallis({{1, 2, 3}}), std::domain_error);
  EXPECT_THROW(KruskalWallis({{1, 2}, {}}), std::domain_error);
}

TEST(KruskalWallisTest, MatchesRankSumOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    std::vector<V> groups(2 + rng() % 3);
    V pooled;
    for (V &g : groups) {
      g = RandomValues(rng, 1 + rng() % 60, t % 2);
      pooled.insert(pooled.end(), g.begin(), g.end());
    }
    if (AllEqual(pooled)) continue;
    ASSERT_NEAR(KruskalWallis(groups).h, OracleKruskalWallis(groups), 1e-9);
  }
}

TEST(KruskalWallisTest, PermutationRelabelingAndMonotoneInvariance) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    std::vector<V> groups(3);
    for (V &g : groups) g = RandomValues(rng, 2 + rng() % 40, t % 2);
    double h = KruskalWallis(groups).h;
    std::vector<V> permuted = groups;
    for (V &g : permuted) std::shuffle(g.begin(), g.end(), rng);
    std::vector<V> relabeled = {groups[2], groups[0], groups[1]};
    std::vector<V> transformed = groups;
    for (V &g : transformed) {
      for (double &v : g) v = std::exp(v / 20.0);
    }
    EXPECT_NEAR(KruskalWallis(permuted).h, h, 1e-12);
    EXPECT_NEAR(KruskalWallis(relabeled).h, h, 1e-12);
    EXPECT_NEAR(KruskalWallis(transformed).h, h, 1e-12);
  }
}

// Welch

TEST(WelchTest, IdenticalSamples) {
  WelchResult r = WelchT(V{1, 2, 3}, V{1, 2, 3});
  EXPECT_DOUBLE_EQ(r.t, 0.0);
  EXPECT_DOUBLE_EQ(r.p_two_sided, 1.0);
}

TEST(WelchTest, HandComputedEqualVariances) {
  WelchResult r = WelchT(V{1, 2, 3, 4}, V{3, 4, 5, 6});
  EXPECT_NEAR(r.t, -2.191, 1e-3);
  EXPECT_NEAR(r.t, -2.0 / std::sqrt(5.0 / 6.0), 1e-12);
  EXPECT_NEAR(r.df, 6.0, 1e-12);
  EXPECT_EQ(r.n_a, 4u);
  EXPECT_EQ(r.n_b, 4u);
}

TEST(WelchTest, DegenerateVarianceIsAnError) {
  EXPECT_THROW(WelchT(V{0, 0, 0}, V{0, 0, 0}), std::domain_error);
  EXPECT_THROW(WelchT(V{1}, V{1, 2}), std::domain_error);
}

TEST(WelchTest, AntisymmetricTSameP) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    V a = RandomValues(rng, 2 + rng() % 50, false), b = RandomValues(rng, 2 + rng() % 50, false);
    WelchResult ab = WelchT(a, b), ba = WelchT(b, a);
    EXPECT_NEAR(ab.t, -ba.t, 1e-12);
    EXPECT_NEAR(ab.p_two_sided, ba.p_two_sided, 1e-12);
    EXPECT_NEAR(ab.df, ba.df, 1e-9);
  }
}

TEST(DistributionTest, KnownTailValues) {
  EXPECT_NEAR(ChiSquareSurvival(3.841458820694124, 1), 0.05, 1e-12);
  EXPECT_NEAR(StudentTSurvival(2.228138851986274, 10), 0.025, 1e-12);
  EXPECT_DOUBLE_EQ(ChiSquareSurvival(0, 2), 1.0);
}

// Random numbers and bootstrap

TEST(SplitMix64Test, KnownSequenceAndRanges) {
  SplitMix64 rng(1234567);
  // Reference outputs of the published SplitMix64 for seed 1234567.
  EXPECT_EQ(rng.Next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.Next(), 3203168211198807973ULL);
  SplitMix64 r2(9);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(r2.Below(7), 7u);
    double u = r2.Uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_THROW(r2.Below(0), std::invalid_argument);
}

TEST(SplitMix64Test, DerivedSeedsAreDistinct) {
  std::set<uint64_t> seen;
  for (uint64_t stream = 0; stream < 5000; ++stream) seen.insert(DeriveSeed(42, stream));
  EXPECT_EQ(seen.size(), 5000u);
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(2, 0));
}

TEST(BootstrapTest, ConstantDataHasZeroSpread) {
  BootstrapResult r = Bootstrap(V{4, 4, 4}, Mean, {200, 1, 0.95});
  EXPECT_DOUBLE_EQ(r.std, 0.0);
  EXPECT_DOUBLE_EQ(r.ci_low, 4.0);
  EXPECT_DOUBLE_EQ(r.ci_high, 4.0);
  EXPECT_EQ(r.n, 3u);
  EXPECT_EQ(r.iterations, 200);
  EXPECT_EQ(r.valid_iterations, 200);
}

TEST(BootstrapTest, BitReproducibleForFixedSeed) {
  V data(250);
  std::iota(data.begin(), data.end(), 0.5);
  BootstrapConfig cfg{500, 17, 0.95};
  V a = BootstrapReplicates(data, Mean, cfg), b = BootstrapReplicates(data, Mean, cfg);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)), 0);
  BootstrapResult ra = Bootstrap(data, Mean, cfg), rb = Bootstrap(data, Mean, cfg);
  EXPECT_EQ(std::memcmp(&ra, &rb, sizeof ra), 0);
  cfg.seed = 18;
  EXPECT_NE(BootstrapReplicates(data, Mean, cfg), a);
}

TEST(BootstrapTest, ValidatesArguments) {
  EXPECT_THROW(Bootstrap(V{}, Mean, {}), std::domain_error);
  EXPECT_THROW(Bootstrap(V{1, 2}, Mean, {0, 1, 0.95}), std::domain_error);
  EXPECT_THROW(Bootstrap(V{1, 2}, Mean, {10, 1, 1.5}), std::domain_error);
}

TEST(BootstrapTest, NonFiniteReplicatesAreExcluded) {
  // Ratio of ones to zeros is infinite when a resample has no zeros.
  auto ratio = [](std::span<const double> s) {
    double ones = std::count(s.begin(), s.end(), 1.0);
    return ones / (static_cast<double>(s.size()) - ones);
  };
  BootstrapResult r = Bootstrap(V{1, 1, 0}, ratio, {400, 3, 0.95});
  EXPECT_LT(r.valid_iterations, 400);
  EXPECT_GT(r.valid_iterations, 0);
  EXPECT_TRUE(std::isfinite(r.ci_high));
}

TEST(BootstrapTest, CalibrationSmoke) {
  int covered = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::mt19937_64 rng(trial);
    std::bernoulli_distribution coin(0.25);
    V sample(400);
    for (double &v : sample) v = coin(rng);
    BootstrapResult r = Bootstrap(sample, Mean, {500, DeriveSeed(8, trial), 0.95});
    covered += r.ci_low <= 0.25 && 0.25 <= r.ci_high;
  }
  EXPECT_GE(covered, 88);
  EXPECT_LE(covered, 100);
}

TEST(QuantileTest, LinearInterpolation) {
  V s{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(SortedQuantile(s, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(SortedQuantile(s, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(SortedQuantile(s, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(SortedQuantile(s, 0.25), 1.75);
}

// Ratios, cumulative shares, bins

TEST(GenderRatioTest, Examples) {
  EXPECT_DOUBLE_EQ(GenderRatio({100, 25}), 0.25);
  EXPECT_DOUBLE_EQ(GenderRatio({50, 50}), 1.0);
  EXPECT_THROW(GenderRatio({0, 5}), std::domain_error);
}

TEST(CumulativeTopNTest, Examples) {
  std::vector<int> cuts{5, 100};
  EXPECT_EQ(CumulativeTopN({{1, 10}, {2, 5}, {100, 5}}, cuts), (V{0.75, 1.0}));
  std::vector<int> five{5};
  EXPECT_EQ(CumulativeTopN({{1, 7}}, five), V{1.0});
  std::map<int, double> uniform;
  for (int r = 1; r <= 100; ++r) uniform[r] = 3;
  std::vector<int> fifty{50};
  EXPECT_DOUBLE_EQ(CumulativeTopN(uniform, fifty)[0], 0.5);
  EXPECT_THROW(CumulativeTopN({{1, 0}}, fifty), std::domain_error);
}

TEST(CumulativeTopNTest, NonDecreasingAndEndsAtOne) {
  std::mt19937_64 rng(9);
  std::map<int, double> counts;
  for (int r = 1; r <= 80; ++r) counts[r] = static_cast<double>(rng() % 20);
  counts[1] += 1;
  std::vector<int> cuts;
  for (int c = 5; c <= 100; c += 5) cuts.push_back(c);
  V shares = CumulativeTopN(counts, cuts);
  EXPECT_TRUE(std::is_sorted(shares.begin(), shares.end()));
  EXPECT_NEAR(shares.back(), 1.0, 1e-12);
}

TEST(BinnedSharesTest, SingleInstitution) {
  std::vector<RankBin> bins = BinnedShares({{10, {{"left", 3}, {"right", 1}}}}, 50);
  ASSERT_EQ(bins.size(), 1u);
  EXPECT_EQ(bins[0].rank_low, 1);
  EXPECT_EQ(bins[0].rank_high, 50);
  EXPECT_DOUBLE_EQ(bins[0].shares.at("left"), 0.75);
  EXPECT_DOUBLE_EQ(bins[0].shares.at("right"), 0.25);
}

TEST(BinnedSharesTest, OneGroupAndEqualGroups) {
  std::map<int, std::map<std::string, double>> one, two;
  for (int r = 1; r <= 120; r += 7) {
    one[r] = {{"left", static_cast<double>(r % 5 + 1)}};
    two[r] = {{"left", 2.0}, {"right", 2.0}};
  }
  for (const RankBin &b : BinnedShares(one, 50)) {
    if (b.total > 0) EXPECT_DOUBLE_EQ(b.shares.at("left"), 1.0);
  }
  for (const RankBin &b : BinnedShares(two, 50)) {
    EXPECT_DOUBLE_EQ(b.shares.at("left"), 0.5);
    EXPECT_DOUBLE_EQ(b.shares.at("right"), 0.5);
    for (double s : b.institution_shares.at("left")) EXPECT_DOUBLE_EQ(s, 0.5);
  }
}

TEST(BinnedSharesTest, SharesPartitionEachBin) {
  std::mt19937_64 rng(10);
  std::map<int, std::map<std::string, double>> counts;
  for (int r = 1; r <= 200; ++r) {
    counts[r] = {{"left", static_cast<double>(rng() % 4)},
                 {"right", static_cast<double>(rng() % 4)}};
  }
  EXPECT_THROW(BinnedShares(counts, 0), std::domain_error);
  for (const RankBin &b : BinnedShares(counts, 30)) {
    if (b.total == 0) continue;
    double sum = 0;
    for (const auto &[g, s] : b.shares) {
      EXPECT_GE(s, 0.0);
      EXPECT_LE(s, 1.0);
      sum += s;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

}  // namespace
}  // namespace expertaudit::stats
