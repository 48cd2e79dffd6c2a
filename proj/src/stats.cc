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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace expertaudit::stats {
namespace {

void RequireFinite(std::span<const double> values, const char *what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::domain_error(std::string(what) + ": non-finite value");
    }
  }
}

double Mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Unbiased sample variance (two-pass).
double Variance(std::span<const double> v, double mean) {
  double ss = 0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(v.size() - 1);
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  double mx = Mean(x), my = Mean(y);
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

bool IsConstant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; });
}

}  // namespace

double Gini(std::span<const double> values) {
  if (values.empty()) throw std::domain_error("gini: empty sample");
  RequireFinite(values, "gini");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0) throw std::domain_error("gini: negative value");
  const double n = static_cast<double>(sorted.size());
  double total = std::accumulate(sorted.begin(), sorted.end(), 0.0);
  if (total <= 0) throw std::domain_error("gini: mean is zero");
  // sum_i sum_j |x_i - x_j| = 2 sum_i (2i - n - 1) x_(i), i 1-based.
  double weighted = 0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    weighted += (2.0 * static_cast<double>(i + 1) - n - 1.0) * sorted[i];
  }
  return std::max(0.0, weighted / (n * total));
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double Spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::domain_error("spearman: length mismatch");
  if (x.size() < 2) throw std::domain_error("spearman: need at least 2 pairs");
  RequireFinite(x, "spearman");
  RequireFinite(y, "spearman");
  if (IsConstant(x) || IsConstant(y)) {
    throw std::domain_error("spearman: constant input");
  }
  std::vector<double> rx = AverageRanks(x);
  std::vector<double> ry = AverageRanks(y);
  return Pearson(rx, ry);
}

CorrelationTest SpearmanTest(std::span<const double> x, std::span<const double> y) {
  CorrelationTest result;
  result.rho = Spearman(x, y);
  result.n = x.size();
  if (result.n > 2) {
    double df = static_cast<double>(result.n) - 2.0;
    double denom = 1.0 - result.rho * result.rho;
    if (denom <= 0) {
      result.p_two_sided = 0.0;
    } else {
      double t = result.rho * std::sqrt(df / denom);
      result.p_two_sided = std::min(1.0, 2.0 * StudentTSurvival(std::fabs(t), df));
    }
  }
  return result;
}

KruskalWallisResult KruskalWallis(const std::vector<std::vector<double>> &groups) {
  if (groups.size() < 2) throw std::domain_error("kruskal-wallis: need >= 2 groups");
  std::vector<double> pooled;
  for (const auto &g : groups) {
    if (g.empty()) throw std::domain_error("kruskal-wallis: empty group");
    RequireFinite(g, "kruskal-wallis");
    pooled.insert(pooled.end(), g.begin(), g.end());
  }
  const double n = static_cast<double>(pooled.size());
  std::vector<double> ranks = AverageRanks(pooled);

  // Tie correction 1 - sum(t^3 - t) / (N^3 - N).
  std::vector<double> sorted = pooled;
  std::sort(sorted.begin(), sorted.end());
  double tie_sum = 0;
  for (size_t i = 0; i < sorted.size();) {
    size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    double t = static_cast<double>(j - i);
    tie_sum += t * t * t - t;
    i = j;
  }
  double correction = 1.0 - tie_sum / (n * n * n - n);
  if (correction <= 0) throw std::domain_error("kruskal-wallis: all values tied");

  double h = 0;
  size_t offset = 0;
  for (const auto &g : groups) {
    double rank_sum = 0;
    for (size_t k = 0; k < g.size(); ++k) rank_sum += ranks[offset + k];
    double ni = static_cast<double>(g.size());
    double dev = rank_sum / ni - (n + 1.0) / 2.0;
    h += ni * dev * dev;
    offset += g.size();
  }
  h = 12.0 / (n * (n + 1.0)) * h / correction;

  KruskalWallisResult result;
  result.h = h;
  result.df = static_cast<int>(groups.size()) - 1;
  result.p = ChiSquareSurvival(h, result.df);
  result.n = pooled.size();
  return result;
}

WelchResult WelchT(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw std::domain_error("welch t: each sample needs n >= 2");
  }
  RequireFinite(a, "welch t");
  RequireFinite(b, "welch t");
  WelchResult r;
  r.n_a = a.size();
  r.n_b = b.size();
  r.mean_a = Mean(a);
  r.mean_b = Mean(b);
  double va = Variance(a, r.mean_a) / static_cast<double>(a.size());
  double vb = Variance(b, r.mean_b) / static_cast<double>(b.size());
  if (va + vb <= 0) throw std::domain_error("welch t: both variances are zero");
  r.t = (r.mean_a - r.mean_b) / std::sqrt(va + vb);
  double na1 = static_cast<double>(a.size()) - 1.0;
  double nb1 = static_cast<double>(b.size()) - 1.0;
  r.df = (va + vb) * (va + vb) / (va * va / na1 + vb * vb / nb1);
  r.p_two_sided = std::min(1.0, 2.0 * StudentTSurvival(std::fabs(r.t), r.df));
  return r;
}

double ChiSquareSurvival(double x, double df) {
  if (x <= 0) return 1.0;
  boost::math::chi_squared_distribution<double> dist(df);
  return boost::math::cdf(boost::math::complement(dist, x));
}

double StudentTSurvival(double t, double df) {
  boost::math::students_t_distribution<double> dist(df);
  return boost::math::cdf(boost::math::complement(dist, t));
}

uint64_t SplitMix64::Next() {
  uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::Below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::Below: bound is zero");
  // Rejection keeps the draw unbiased.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return x % bound;
}

double SplitMix64::Uniform() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  SplitMix64 mix(seed ^ (stream * 0xD1B54A32D192ED03ULL));
  mix.Next();
  return mix.Next();
}

std::vector<double> BootstrapReplicates(std::span<const double> data,
                                        const Statistic &statistic,
                                        const BootstrapConfig &config) {
  if (data.empty()) throw std::domain_error("bootstrap: empty data");
  if (config.iterations < 1) throw std::domain_error("bootstrap: iterations < 1");
  std::vector<double> replicates(static_cast<size_t>(config.iterations));
  std::vector<double> sample(data.size());
  for (int b = 0; b < config.iterations; ++b) {
    SplitMix64 rng(DeriveSeed(config.seed, static_cast<uint64_t>(b)));
    for (double &x : sample) x = data[rng.Below(data.size())];
    replicates[static_cast<size_t>(b)] = statistic(sample);
  }
  return replicates;
}

double SortedQuantile(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw std::domain_error("quantile of empty data");
  double pos = q * static_cast<double>(sorted.size() - 1);
  size_t lo = static_cast<size_t>(std::floor(pos));
  size_t hi = std::min(lo + 1, sorted.size() - 1);
  double frac = pos - static_cast<double>(lo);
  if (frac == 0) return sorted[lo];
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

BootstrapResult Bootstrap(std::span<const double> data, const Statistic &statistic,
                          const BootstrapConfig &config) {
  if (!(config.confidence > 0 && config.confidence < 1)) {
    throw std::domain_error("bootstrap: confidence must be in (0, 1)");
  }
  std::vector<double> replicates = BootstrapReplicates(data, statistic, config);
  std::vector<double> finite;
  for (double r : replicates) {
    if (std::isfinite(r)) finite.push_back(r);
  }
  BootstrapResult result;
  result.n = data.size();
  result.iterations = config.iterations;
  result.valid_iterations = static_cast<int>(finite.size());
  if (finite.empty()) {
    result.mean = result.std = result.ci_low = result.ci_high =
        std::numeric_limits<double>::quiet_NaN();
    return result;
  }
  result.mean = Mean(finite);
  result.std = finite.size() > 1 ? std::sqrt(Variance(finite, result.mean)) : 0.0;
  std::sort(finite.begin(), finite.end());
  double alpha = 1.0 - config.confidence;
  result.ci_low = SortedQuantile(finite, alpha / 2.0);
  result.ci_high = SortedQuantile(finite, 1.0 - alpha / 2.0);
  return result;
}

double GenderRatio(const GenderCounts &counts) {
  if (counts.men <= 0) throw std::domain_error("gender ratio: no men");
  if (counts.women < 0) throw std::domain_error("gender ratio: negative count");
  return static_cast<double>(counts.women) / static_cast<double>(counts.men);
}

std::vector<double> CumulativeTopN(const std::map<int, double> &mentions_by_rank,
                                   std::span<const int> cut_points) {
  double total = 0;
  for (const auto &[rank, count] : mentions_by_rank) {
    if (!(count >= 0) || !std::isfinite(count)) {
      throw std::domain_error("cumulative top-n: counts must be >= 0");
    }
    total += count;
  }
  if (total <= 0) throw std::domain_error("cumulative top-n: no mentions");
  std::vector<double> shares;
  for (int cut : cut_points) {
    double sum = 0;
    for (const auto &[rank, count] : mentions_by_rank) {
      if (rank > cut) break;
      sum += count;
    }
    shares.push_back(sum / total);
  }
  return shares;
}

std::vector<RankBin> BinnedShares(
    const std::map<int, std::map<std::string, double>> &mentions, int bin_width) {
  if (bin_width < 1) throw std::domain_error("binned shares: bin width < 1");
  std::set<std::string> groups;
  int max_rank = 0;
  for (const auto &[rank, by_group] : mentions) {
    if (rank < 1) throw std::domain_error("binned shares: rank < 1");
    max_rank = std::max(max_rank, rank);
    for (const auto &[group, count] : by_group) {
      if (!(count >= 0)) throw std::domain_error("binned shares: negative count");
      groups.insert(group);
    }
  }
  std::vector<RankBin> bins;
  for (int low = 1; low <= max_rank; low += bin_width) {
    RankBin bin;
    bin.rank_low = low;
    bin.rank_high = low + bin_width - 1;
    std::map<std::string, double> totals;
    for (auto it = mentions.lower_bound(low);
         it != mentions.end() && it->first <= bin.rank_high; ++it) {
      double inst_total = 0;
      for (const auto &[group, count] : it->second) inst_total += count;
      for (const auto &[group, count] : it->second) totals[group] += count;
      bin.total += inst_total;
      if (inst_total > 0) {
        for (const std::string &g : groups) {
          auto found = it->second.find(g);
          double c = found == it->second.end() ? 0.0 : found->second;
          bin.institution_shares[g].push_back(c / inst_total);
        }
      }
    }
    if (bin.total > 0) {
      for (const std::string &g : groups) bin.shares[g] = totals[g] / bin.total;
    }
    bins.push_back(std::move(bin));
  }
  return bins;
}

}  // namespace expertaudit::stats
