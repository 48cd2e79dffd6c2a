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

// Audit report: every table and statistic computed from a list of expert
// mentions, and the end-to-end audit driver.
//
// Statistics that are undefined for the data at hand (no men, a single
// outlet per ideology, ...) are left empty and carry a short reason instead.

#ifndef EXPERTAUDIT_REPORT_H_
#define EXPERTAUDIT_REPORT_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expertaudit/pipeline.h"
#include "expertaudit/stats.h"

namespace expertaudit {

struct ReportOptions {
  uint64_t seed = 0;
  int bootstrap_iterations = 1000;
  int bin_width = 50;
  GenderPolicy unique_gender = GenderPolicy::kFirstMention;
  // Top-n cut points for the cumulative curves; empty means 5, 10, ..., 100.
  std::vector<int> cut_points;
};

struct GenderTally {
  int64_t man = 0;
  int64_t woman = 0;
  int64_t unknown = 0;  // merged: androgynous + unknown
  int64_t raw_andy = 0;
  int64_t raw_unknown = 0;

  void Add(GenderLabel label);
  int64_t total() const { return man + woman + unknown; }
  int64_t known() const { return man + woman; }
  // Shares among known-gender mentions; empty when there are none.
  std::optional<double> man_share() const;
  std::optional<double> woman_share() const;
  // Merged unknown over all mentions, and raw unknown only (before the
  // androgynous category is folded in).
  std::optional<double> unknown_fraction() const;
  std::optional<double> raw_unknown_fraction() const;
  // women / men; empty without men.
  std::optional<double> ratio() const;
};

// A bootstrapped estimate, or the reason it is undefined.
struct Estimate {
  std::optional<double> value;
  std::optional<stats::BootstrapResult> bootstrap;
  std::string undefined_reason;
};

struct Totals {
  int64_t mentions = 0;
  int64_t unique_experts = 0;
  int64_t sentences_with_mentions = 0;
  int64_t linked_mentions = 0;
  std::optional<double> unknown_fraction_pre_merge;
  std::optional<double> unknown_fraction_post_merge;
};

struct GenderComposition {
  GenderTally mentions;
  GenderTally unique;
  Estimate ratio;  // women / men over all mentions
};

struct OrgTypeGender {
  OrgType type = OrgType::kAcademic;
  GenderTally tally;
  // Share of mentions (unknown gender included) per merged category.
  Estimate man;
  Estimate woman;
  Estimate unknown;
};

struct OutletRow {
  std::string key;
  std::string display_name;
  Ideology ideology = Ideology::kLeft;
  int64_t mentions = 0;
  GenderTally gender;
  Estimate ratio;  // women / men
  std::optional<double> women_share;
  int64_t linked = 0;
  std::array<int64_t, 3> org_type_counts{};  // indexed by OrgType
  std::array<std::optional<double>, 3> org_type_shares{};
};

struct KruskalWallisSection {
  std::string mode;  // "per_outlet" or "bootstrap_replicates"
  std::string statistic = "women_share";
  std::vector<size_t> group_sizes;  // left, right
  std::optional<stats::KruskalWallisResult> result;
  std::string undefined_reason;
};

struct InstitutionRow {
  std::string name;
  int rank = 0;
  int64_t mentions = 0;
  int64_t left = 0;
  int64_t right = 0;
  int64_t man = 0;
  int64_t woman = 0;
};

struct PrestigeSummary {
  std::string scope;  // overall, left, right, man, woman, public_health
  size_t institutions = 0;
  int64_t mentions = 0;
  std::optional<double> gini;
  std::optional<stats::CorrelationTest> spearman;  // rank vs mentions
  std::string undefined_reason;
};

struct BoxStats {
  size_t n = 0;
  double min = 0;
  double q1 = 0;
  double median = 0;
  double q3 = 0;
  double max = 0;
  double mean = 0;
};

struct PrestigeBin {
  stats::RankBin bin;
  std::map<std::string, BoxStats> boxes;  // group -> institution shares
};

struct CumulativeCurve {
  std::string group;  // overall, man, woman
  int64_t mentions = 0;
  std::vector<double> shares;  // aligned with cut points; empty if undefined
};

struct SentenceLength {
  size_t n_man = 0;
  size_t n_woman = 0;
  std::optional<double> mean_man;
  std::optional<double> mean_woman;
  std::optional<stats::WelchResult> welch;  // men minus women
  std::string undefined_reason;
};

struct CoMention {
  int64_t sentences = 0;  // sentences with at least one known-gender expert
  int64_t man_sentences = 0;
  int64_t woman_sentences = 0;
  int64_t mixed_sentences = 0;
  std::optional<double> man_given_woman;  // P(man present | woman present)
  std::optional<double> woman_given_man;
};

struct Provenance {
  std::map<std::string, int64_t> by_label;  // exact detector combination
  std::array<int64_t, 3> any_detector{};    // DirectPattern, Clausal, According
  int64_t direct_pattern_only = 0;
  int64_t other = 0;
};

struct AuditReport {
  ReportOptions options;
  std::map<std::string, std::string> meta;  // free-form run settings
  bool empty = true;

  Totals totals;
  Provenance provenance;
  GenderComposition gender;
  std::vector<OrgTypeGender> gender_by_org_type;
  std::vector<OutletRow> outlets;  // left outlets first
  std::vector<KruskalWallisSection> kruskal_wallis;
  std::vector<InstitutionRow> institutions;                // world rank order
  std::vector<InstitutionRow> public_health_institutions;  // public-health rank
  std::vector<PrestigeSummary> prestige;
  std::vector<PrestigeBin> prestige_bins;
  std::vector<int> cut_points;
  std::vector<CumulativeCurve> cumulative;
  SentenceLength sentence_length;
  CoMention co_mention;
};

// Builds the report. Mentions must come from outlets in `sources`;
// `gazetteer` supplies the ranked institution population.
AuditReport BuildReport(const std::vector<ExpertMention> &mentions,
                        const SourceConfig &sources, const Gazetteer &gazetteer,
                        const ReportOptions &options = {});

// The full report as pretty-printed JSON with a fixed key order.
std::string ReportToJson(const AuditReport &report);

struct AuditConfig {
  std::string corpus_path;
  std::string sources_path;
  std::string gazetteer_dir;
  std::string lexicon_dir;
  ExtractOptions extract;
  ReportOptions report;
};

struct AuditResult {
  ReaderStats reader;
  ExtractStats extract;
  std::vector<ExpertMention> mentions;
  AuditReport report;
};

AuditResult RunAudit(const AuditConfig &config, WarningSink warn = StderrWarnings());

}  // namespace expertaudit

#endif  // EXPERTAUDIT_REPORT_H_
