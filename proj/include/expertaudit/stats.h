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

// Inequality statistics and hypothesis tests.
//
// All functions throw std::domain_error on inputs for which the statistic is
// undefined (empty samples, zero means, fully tied data, ...).

#ifndef EXPERTAUDIT_STATS_H_
#define EXPERTAUDIT_STATS_H_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace expertaudit::stats {

// Gini coefficient sum_i sum_j |x_i - x_j| / (2 n^2 mean). Values must be
// finite and non-negative with a positive mean.
double Gini(std::span<const double> values);

// Average ranks (1-based); tied values share the mean of their positions.
std::vector<double> AverageRanks(std::span<const double> values);

// Pearson correlation of the average ranks. Throws for length mismatch,
// n < 2, or a constant side.
double Spearman(std::span<const double> x, std::span<const double> y);

struct CorrelationTest {
  double rho = 0;
  double p_two_sided = 1;  // t approximation with n - 2 degrees of freedom
  size_t n = 0;
};
CorrelationTest SpearmanTest(std::span<const double> x, std::span<const double> y);

struct KruskalWallisResult {
  double h = 0;
  double p = 1;
  int df = 0;
  size_t n = 0;
};

// Kruskal-Wallis H with tie correction; p from the chi-square survival
// function with k - 1 degrees of freedom.
KruskalWallisResult KruskalWallis(const std::vector<std::vector<double>> &groups);

struct WelchResult {
  double t = 0;
  double df = 0;
  double p_two_sided = 1;
  double mean_a = 0;
  double mean_b = 0;
  size_t n_a = 0;
  size_t n_b = 0;
};

// Welch's unequal-variance two-sample t-test.
WelchResult WelchT(std::span<const double> a, std::span<const double> b);

// Survival functions used by the tests above.
double ChiSquareSurvival(double x, double df);
double StudentTSurvival(double t, double df);

struct BootstrapConfig {
  int iterations = 1000;
  uint64_t seed = 0;
  double confidence = 0.95;
};

struct BootstrapResult {
  double mean = 0;
  double std = 0;  // sample standard deviation of the replicates
  double ci_low = 0;
  double ci_high = 0;
  size_t n = 0;                // size of the resampled data
  int iterations = 0;          // requested replicates
  int valid_iterations = 0;    // replicates with a finite statistic
};

using Statistic = std::function<double(std::span<const double>)>;

// Percentile bootstrap. Replicate b draws n indexes with replacement from a
// generator seeded by (seed, b), so results do not depend on scheduling.
// Replicates whose statistic is not finite are left out of the summary.
BootstrapResult Bootstrap(std::span<const double> data, const Statistic &statistic,
                          const BootstrapConfig &config);

// The raw replicate statistics (NaN where undefined), in replicate order.
std::vector<double> BootstrapReplicates(std::span<const double> data,
                                        const Statistic &statistic,
                                        const BootstrapConfig &config);

// Linear-interpolation quantile of sorted data (q in [0, 1]).
double SortedQuantile(std::span<const double> sorted, double q);

// Deterministic 64-bit generator (SplitMix64) with an unbiased bounded draw.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t Next();
  // Uniform integer in [0, bound). bound must be positive.
  uint64_t Below(uint64_t bound);
  // Uniform double in [0, 1).
  double Uniform();

 private:
  uint64_t state_;
};

// Seed for an independent stream derived from a base seed and a stream index.
uint64_t DeriveSeed(uint64_t seed, uint64_t stream);

struct GenderCounts {
  int64_t men = 0;
  int64_t women = 0;
};

// women / men. Throws when there are no men.
double GenderRatio(const GenderCounts &counts);

// For each cut n, the share of all mentions at ranks <= n.
std::vector<double> CumulativeTopN(const std::map<int, double> &mentions_by_rank,
                                   std::span<const int> cut_points);

struct RankBin {
  int rank_low = 0;   // inclusive
  int rank_high = 0;  // inclusive
  double total = 0;
  // Group -> share of the bin's mentions (empty when total is zero).
  std::map<std::string, double> shares;
  // Group -> per-institution shares within the bin, for institutions with at
  // least one mention, in rank order.
  std::map<std::string, std::vector<double>> institution_shares;
};

// Bins ranks into [1, w], [w + 1, 2w], ... up to the largest rank present and
// splits each bin's mentions between groups. `mentions` maps
// rank -> group -> count.
std::vector<RankBin> BinnedShares(
    const std::map<int, std::map<std::string, double>> &mentions, int bin_width);

}  // namespace expertaudit::stats

#endif  // EXPERTAUDIT_STATS_H_
