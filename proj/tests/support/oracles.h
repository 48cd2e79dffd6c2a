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

// Brute-force reference implementations. They share no code with the
// library: quadratic loops, counting ranks, long double accumulation.

#ifndef EXPERTAUDIT_TESTS_SUPPORT_ORACLES_H_
#define EXPERTAUDIT_TESTS_SUPPORT_ORACLES_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace expertaudit::testing {

// Mean absolute difference over all ordered pairs, halved and normalized by
// the mean.
inline double OracleGini(const std::vector<double> &x) {
  const size_t n = x.size();
  long double sum = 0, diffs = 0;
  for (double v : x) sum += v;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) diffs += std::fabs(static_cast<long double>(x[i]) - x[j]);
  }
  long double mean = sum / n;
  return static_cast<double>(diffs / (2.0L * n * n * mean));
}

// Rank by counting: 1 + #smaller + (#equal - 1) / 2.
inline std::vector<long double> OracleRanks(const std::vector<double> &x) {
  std::vector<long double> r(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    size_t less = 0, equal = 0;
    for (double v : x) {
      if (v < x[i]) ++less;
      if (v == x[i]) ++equal;
    }
    r[i] = 1.0L + less + (equal - 1) / 2.0L;
  }
  return r;
}

inline double OraclePearson(const std::vector<long double> &a,
                            const std::vector<long double> &b) {
  const size_t n = a.size();
  long double ma = 0, mb = 0;
  for (size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  long double sab = 0, saa = 0, sbb = 0;
  for (size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return static_cast<double>(sab / std::sqrt(saa * sbb));
}

inline double OracleSpearman(const std::vector<double> &x, const std::vector<double> &y) {
  return OraclePearson(OracleRanks(x), OracleRanks(y));
}

// Classic 1 - 6 sum(d^2) / (n (n^2 - 1)); exact only without ties.
inline double OracleSpearmanNoTies(const std::vector<double> &x,
                                   const std::vector<double> &y) {
  std::vector<long double> rx = OracleRanks(x), ry = OracleRanks(y);
  long double d2 = 0;
  for (size_t i = 0; i < x.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  long double n = x.size();
  return static_cast<double>(1.0L - 6.0L * d2 / (n * (n * n - 1.0L)));
}

// H from direct rank sums over the pooled sample, divided by the tie
// correction 1 - sum(t^3 - t) / (N^3 - N).
inline double OracleKruskalWallis(const std::vector<std::vector<double>> &groups) {
  std::vector<double> pooled;
  for (const auto &g : groups) pooled.insert(pooled.end(), g.begin(), g.end());
  std::vector<long double> ranks = OracleRanks(pooled);
  long double n = pooled.size();
  long double acc = 0;
  size_t offset = 0;
  for (const auto &g : groups) {
    long double r = 0;
    for (size_t i = 0; i < g.size(); ++i) r += ranks[offset + i];
    offset += g.size();
    acc += r * r / g.size();
  }
  long double h = 12.0L / (n * (n + 1)) * acc - 3.0L * (n + 1);
  long double ties = 0;
  for (size_t i = 0; i < pooled.size(); ++i) {
    bool first = true;
    long double t = 0;
    for (size_t j = 0; j < pooled.size(); ++j) {
      if (pooled[j] == pooled[i]) {
        ++t;
        if (j < i) first = false;
      }
    }
    if (first) ties += t * t * t - t;
  }
  return static_cast<double>(h / (1.0L - ties / (n * n * n - n)));
}

// Random inputs: continuous values (ties have probability zero) or small
// integers (ties certain for larger n).
inline std::vector<double> RandomValues(std::mt19937_64 &rng, size_t n, bool ties) {
  std::vector<double> v(n);
  std::uniform_real_distribution<double> cont(0.0, 100.0);
  std::uniform_int_distribution<int> disc(0, 9);
  for (double &x : v) x = ties ? disc(rng) : cont(rng);
  return v;
}

inline bool AllEqual(const std::vector<double> &v) {
  for (double x : v) {
    if (x != v.front()) return false;
  }
  return true;
}

}  // namespace expertaudit::testing

#endif  // EXPERTAUDIT_TESTS_SUPPORT_ORACLES_H_
