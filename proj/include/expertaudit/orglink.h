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

// Fuzzy string similarity and linking of organization mentions to the
// academic, federal and think-tank gazetteers.

#ifndef EXPERTAUDIT_ORGLINK_H_
#define EXPERTAUDIT_ORGLINK_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "expertaudit/corpus.h"

namespace expertaudit {

// Score at or above which two names are considered the same entity.
inline constexpr int kMatchThreshold = 90;

// Organizations whose name has this many letters and digits or fewer are
// ignored ("'s", "AP").
inline constexpr size_t kMaxIgnoredOrgLength = 2;

bool IsIgnorableOrgName(std::string_view name);

// Byte-level Levenshtein distance (unit insert, delete, substitute).
size_t LevenshteinDistance(std::string_view a, std::string_view b);

// round(100 * (1 - lev(a, b) / max(|a|, |b|, 1))).
int NormalizedRatio(std::string_view a, std::string_view b);

// Token-set similarity in [0, 100]. Both strings are case-folded and split on
// non-alphanumerics. With I the sorted intersection, A = I + sorted(a - b) and
// B = I + sorted(b - a), the score is the best NormalizedRatio over the pairs
// (I, A), (I, B) and (A, B). Token-set containment therefore scores 100.
// Two token-less strings score 100; one token-less string scores 0.
int TokenSetSimilarity(std::string_view a, std::string_view b);

// Lowercase alphanumeric tokens of `text`, sorted and deduplicated.
std::vector<std::string> SortedTokenSet(std::string_view text);

// TokenSetSimilarity on pre-tokenized inputs (see SortedTokenSet). Scores
// below `cutoff` may be underestimated; scores at or above it are exact.
int TokenSetSimilarity(const std::vector<std::string> &a,
                       const std::vector<std::string> &b, int cutoff = 0);

// NormalizedRatio of the two strings' sorted token lists. Unlike the token-set
// score this penalizes extra tokens on either side.
int TokenSortSimilarity(std::string_view a, std::string_view b);

enum class OrgType { kAcademic = 0, kFederal = 1, kThinkTank = 2 };
inline constexpr OrgType kAllOrgTypes[] = {OrgType::kAcademic, OrgType::kFederal,
                                           OrgType::kThinkTank};

std::string_view OrgTypeName(OrgType type);
std::optional<OrgType> ParseOrgType(std::string_view name);

struct OrgRecord {
  std::string name;
  OrgType type = OrgType::kAcademic;
  std::optional<int> world_rank;          // academic only, 1..400
  std::optional<int> public_health_rank;  // academic only, 1..48
  std::string region;                     // think tanks, informational
};

struct OrgLink {
  std::string mention_text;
  const OrgRecord *record = nullptr;
  int score = 0;
};

// The loaded gazetteers. Records are immutable after construction.
class Gazetteer {
 public:
  Gazetteer() = default;
  // Records with a name already present for the same type are dropped with a
  // warning.
  explicit Gazetteer(std::vector<OrgRecord> records,
                     std::vector<std::string> warnings = {});

  // OrgLink holds pointers into the record table.
  Gazetteer(const Gazetteer &) = delete;
  Gazetteer &operator=(const Gazetteer &) = delete;
  Gazetteer(Gazetteer &&) = default;
  Gazetteer &operator=(Gazetteer &&) = default;

  // Reads universities.csv (rank,name), public_health.csv (rank,name),
  // federal.txt (one name per line) and thinktanks.csv (name[,region]) from
  // `dir`. Public-health rows join the academic record they match at >= 90;
  // unmatched rows become academic records without a world rank. Throws
  // std::runtime_error for missing files and std::invalid_argument for bad
  // rows.
  static Gazetteer LoadDirectory(const std::string &dir,
                                 WarningSink warn = StderrWarnings());

  const std::vector<OrgRecord> &records() const { return records_; }
  const std::vector<std::string> &warnings() const { return warnings_; }
  size_t CountType(OrgType type) const;

  // Academic records with a world rank, ordered by rank.
  std::vector<const OrgRecord *> WorldRanked() const;
  // Academic records with a public-health rank, ordered by that rank.
  std::vector<const OrgRecord *> PublicHealthRanked() const;
  const OrgRecord *FindExact(OrgType type, std::string_view name) const;

  // Best-scoring record for a mention, or nothing when the mention is too
  // short or scores below the threshold. Ties go to Academic, then Federal,
  // then ThinkTank; then to the higher token-sort score; then to the
  // lexicographically smallest name.
  std::optional<OrgLink> Link(std::string_view mention) const;

 private:
  std::vector<OrgRecord> records_;
  std::vector<std::vector<std::string>> record_tokens_;
  std::vector<std::string> warnings_;
};

// Free-function form of Gazetteer::Link.
std::optional<OrgLink> LinkOrg(std::string_view mention,
                               const Gazetteer &gazetteer);

// Minimal RFC 4180 field splitter for one CSV record line.
std::vector<std::string> SplitCsvLine(std::string_view line);

}  // namespace expertaudit

#endif  // EXPERTAUDIT_ORGLINK_H_
