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

// Synthetic corpus with a planted gender ratio and planted attention over
// ranked universities. Quotas are exact: largest-remainder rounding of the
// target shares, then a seeded shuffle over mention slots.

#ifndef EXPERTAUDIT_TESTS_SUPPORT_SYNTHETIC_H_
#define EXPERTAUDIT_TESTS_SUPPORT_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "expertaudit/corpus.h"

namespace expertaudit::testing {

struct SyntheticConfig {
  int articles = 1000;
  int mentions_per_article = 2;
  int men_weight = 3;  // men : women = men_weight : women_weight
  int women_weight = 1;
  int institutions = 100;  // ranks 1..institutions from universities.csv
  double zipf_s = 1.0;
  uint64_t seed = 1;
};

struct SyntheticCorpus {
  std::vector<Article> articles;
  int64_t men = 0;
  int64_t women = 0;
  std::vector<int64_t> mentions_by_rank;  // index 0 is rank 1
  std::vector<double> zipf_shares;        // target shares, index 0 is rank 1
  double analytic_gini = 0;               // Gini of the target shares
};

// Zipf(s) shares over ranks 1..n.
std::vector<double> ZipfShares(int n, double s);

// Largest-remainder apportionment of `total` over `shares` (sum to 1).
std::vector<int64_t> Apportion(const std::vector<double> &shares, int64_t total);

// Names come from the shipped first-name dictionary (male and female entries
// only) and universities from the shipped gazetteer under `data_dir`.
SyntheticCorpus GenerateSynthetic(const SyntheticConfig &config,
                                  const std::string &data_dir);

void WriteArticlesJsonl(const std::vector<Article> &articles, const std::string &path);

}  // namespace expertaudit::testing

#endif  // EXPERTAUDIT_TESTS_SUPPORT_SYNTHETIC_H_
