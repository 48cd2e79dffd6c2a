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

#include "expertaudit/orglink.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <tuple>

namespace expertaudit {
namespace {

std::vector<std::string> SortedUniqueTokens(std::string_view text) {
  std::vector<std::string> tokens = SimilarityTokens(text);
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return tokens;
}

std::string Join(const std::vector<std::string> &tokens) {
  std::string out;
  for (const std::string &t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

int RatioFromDistance(size_t distance, size_t len_a, size_t len_b) {
  size_t denom = std::max<size_t>({len_a, len_b, 1});
  double r = 100.0 * (1.0 - static_cast<double>(distance) / denom);
  return static_cast<int>(std::lround(r));
}

// Upper bound on NormalizedRatio from the length difference alone.
int RatioUpperBound(size_t len_a, size_t len_b) {
  size_t diff = len_a > len_b ? len_a - len_b : len_b - len_a;
  return RatioFromDistance(diff, len_a, len_b);
}

// The three strings compared by the token-set score.
struct TokenSetParts {
  std::string intersection;
  std::string a;
  std::string b;
};

TokenSetParts BuildParts(const std::vector<std::string> &ta,
                         const std::vector<std::string> &tb) {
  std::vector<std::string> common, only_a, only_b;
  std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                        std::back_inserter(common));
  std::set_difference(ta.begin(), ta.end(), tb.begin(), tb.end(),
                      std::back_inserter(only_a));
  std::set_difference(tb.begin(), tb.end(), ta.begin(), ta.end(),
                      std::back_inserter(only_b));
  TokenSetParts parts;
  parts.intersection = Join(common);
  auto extend = [&](const std::vector<std::string> &rest) {
    std::string s = parts.intersection;
    std::string tail = Join(rest);
    if (!s.empty() && !tail.empty()) s.push_back(' ');
    return s + tail;
  };
  parts.a = extend(only_a);
  parts.b = extend(only_b);
  return parts;
}

// Token-set score on pre-tokenized inputs. Pairs whose length bound falls
// below `cutoff` are not evaluated; the result is exact whenever it is at
// least `cutoff`.
int TokenSetScore(const std::vector<std::string> &ta,
                  const std::vector<std::string> &tb, int cutoff) {
  if (ta.empty() && tb.empty()) return 100;
  if (ta.empty() || tb.empty()) return 0;
  TokenSetParts p = BuildParts(ta, tb);
  // The intersection is a prefix of both extended strings, so its distance to
  // either is the length difference.
  int best = std::max(
      RatioFromDistance(p.a.size() - p.intersection.size(), p.intersection.size(),
                        p.a.size()),
      RatioFromDistance(p.b.size() - p.intersection.size(), p.intersection.size(),
                        p.b.size()));
  if (best < 100 && RatioUpperBound(p.a.size(), p.b.size()) >= std::max(cutoff, best + 1)) {
    best = std::max(best, NormalizedRatio(p.a, p.b));
  }
  return best;
}

}  // namespace

bool IsIgnorableOrgName(std::string_view name) {
  size_t letters = 0;
  for (char c : name) {
    if (IsAsciiAlnum(c) || static_cast<unsigned char>(c) >= 0x80) ++letters;
  }
  return letters <= kMaxIgnoredOrgLength;
}

size_t LevenshteinDistance(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<size_t> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t up = row[j];
      size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

int NormalizedRatio(std::string_view a, std::string_view b) {
  return RatioFromDistance(LevenshteinDistance(a, b), a.size(), b.size());
}

std::vector<std::string> SortedTokenSet(std::string_view text) {
  return SortedUniqueTokens(text);
}

int TokenSetSimilarity(const std::vector<std::string> &a,
                       const std::vector<std::string> &b, int cutoff) {
  return TokenSetScore(a, b, cutoff);
}

int TokenSetSimilarity(std::string_view a, std::string_view b) {
  return TokenSetScore(SortedUniqueTokens(a), SortedUniqueTokens(b), 0);
}

int TokenSortSimilarity(std::string_view a, std::string_view b) {
  std::vector<std::string> ta = SimilarityTokens(a);
  std::vector<std::string> tb = SimilarityTokens(b);
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  return NormalizedRatio(Join(ta), Join(tb));
}

std::string_view OrgTypeName(OrgType type) {
  switch (type) {
    case OrgType::kAcademic:
      return "academic";
    case OrgType::kFederal:
      return "federal";
    case OrgType::kThinkTank:
      return "think_tank";
  }
  return "unknown";
}

std::optional<OrgType> ParseOrgType(std::string_view name) {
  for (OrgType t : kAllOrgTypes) {
    if (OrgTypeName(t) == name) return t;
  }
  return std::nullopt;
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::string(Trim(field)));
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(std::string(Trim(field)));
  return fields;
}

Gazetteer::Gazetteer(std::vector<OrgRecord> records,
                     std::vector<std::string> warnings)
    : warnings_(std::move(warnings)) {
  std::set<std::pair<OrgType, std::string>> seen;
  for (OrgRecord &r : records) {
    if (!seen.insert({r.type, r.name}).second) {
      warnings_.push_back("duplicate " + std::string(OrgTypeName(r.type)) +
                          " name '" + r.name + "', first kept");
      continue;
    }
    records_.push_back(std::move(r));
  }
  for (const OrgRecord &r : records_) {
    record_tokens_.push_back(SortedUniqueTokens(r.name));
  }
}

namespace {

struct CsvRow {
  int line_number;
  std::vector<std::string> fields;
};

// Rows of a gazetteer CSV, skipping blank and '#' lines and the header row.
std::vector<CsvRow> ReadCsvRows(const std::string &path,
                                std::string_view header_first_field) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gazetteer file " + path);
  std::vector<CsvRow> rows;
  std::string line;
  int line_number = 0;
  bool header_checked = false;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> fields = SplitCsvLine(t);
    if (!header_checked) {
      header_checked = true;
      if (AsciiLower(fields[0]) == header_first_field) continue;
    }
    rows.push_back({line_number, std::move(fields)});
  }
  return rows;
}

int ParseRank(const std::string &path, const CsvRow &row, int max_rank) {
  const std::string &field = row.fields[0];
  int rank = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), rank);
  if (ec != std::errc() || ptr != field.data() + field.size() || rank < 1 ||
      rank > max_rank) {
    throw std::invalid_argument(path + ":" + std::to_string(row.line_number) +
                                ": rank must be an integer in 1.." +
                                std::to_string(max_rank));
  }
  return rank;
}

const std::string &RequireName(const std::string &path, const CsvRow &row,
                               size_t column) {
  if (row.fields.size() <= column || row.fields[column].empty()) {
    throw std::invalid_argument(path + ":" + std::to_string(row.line_number) +
                                ": missing name");
  }
  return row.fields[column];
}

}  // namespace

Gazetteer Gazetteer::LoadDirectory(const std::string &dir, WarningSink warn) {
  namespace fs = std::filesystem;
  const std::string universities = (fs::path(dir) / "universities.csv").string();
  const std::string public_health = (fs::path(dir) / "public_health.csv").string();
  const std::string federal = (fs::path(dir) / "federal.txt").string();
  const std::string thinktanks = (fs::path(dir) / "thinktanks.csv").string();
  for (const std::string &p : {universities, public_health, federal, thinktanks}) {
    if (!fs::exists(p)) throw std::runtime_error("missing gazetteer file " + p);
  }

  std::vector<OrgRecord> records;
  std::vector<std::string> warnings;
  auto warn_dup = [&](const std::string &file, const std::string &name) {
    warnings.push_back(file + ": duplicate name '" + name + "', first kept");
  };

  std::set<std::string> seen;
  for (const CsvRow &row : ReadCsvRows(universities, "rank")) {
    int rank = ParseRank(universities, row, 400);
    const std::string &name = RequireName(universities, row, 1);
    if (!seen.insert(name).second) {
      warn_dup(universities, name);
      continue;
    }
    records.push_back({name, OrgType::kAcademic, rank, std::nullopt, ""});
  }
  const size_t academic_count = records.size();

  // Public-health rows attach to the best-matching ranked university.
  std::vector<std::vector<std::string>> academic_tokens;
  for (size_t i = 0; i < academic_count; ++i) {
    academic_tokens.push_back(SortedUniqueTokens(records[i].name));
  }
  struct HealthRow {
    int rank;
    std::string name;
    std::vector<std::string> tokens;
    bool done = false;
  };
  std::vector<HealthRow> health_rows;
  seen.clear();
  for (const CsvRow &row : ReadCsvRows(public_health, "rank")) {
    int rank = ParseRank(public_health, row, 48);
    const std::string &name = RequireName(public_health, row, 1);
    if (!seen.insert(name).second) {
      warn_dup(public_health, name);
      continue;
    }
    health_rows.push_back({rank, name, SortedUniqueTokens(name)});
  }
  // Rows naming a university exactly (same token set) claim it first, so a
  // longer name such as "University of South Florida" cannot take the record
  // of "University of Florida" through token containment.
  for (HealthRow &row : health_rows) {
    for (size_t i = 0; i < academic_count; ++i) {
      if (academic_tokens[i] == row.tokens && !records[i].public_health_rank) {
        records[i].public_health_rank = row.rank;
        row.done = true;
        break;
      }
    }
  }
  for (HealthRow &row : health_rows) {
    if (row.done) continue;
    // Highest score wins; among equals, a university not yet carrying a
    // public-health rank, then the smallest name.
    std::optional<std::tuple<int, bool, std::string_view>> best_key;
    size_t best = academic_count;
    for (size_t i = 0; i < academic_count; ++i) {
      int score = TokenSetScore(row.tokens, academic_tokens[i], kMatchThreshold);
      if (score < kMatchThreshold) continue;
      std::tuple<int, bool, std::string_view> key{
          -score, records[i].public_health_rank.has_value(), records[i].name};
      if (!best_key || key < *best_key) {
        best_key = key;
        best = i;
      }
    }
    if (best < academic_count && !records[best].public_health_rank) {
      records[best].public_health_rank = row.rank;
      continue;
    }
    std::string reason = best < academic_count
                             ? "its match '" + records[best].name +
                                   "' already has a public-health rank"
                             : "it matches no ranked university";
    warnings.push_back(public_health + ": '" + row.name + "' added without a world rank; " +
                       reason);
    records.push_back({row.name, OrgType::kAcademic, std::nullopt, row.rank, ""});
  }

  seen.clear();
  for (const std::string &name : ReadListFile(federal)) {
    if (!seen.insert(name).second) {
      warn_dup(federal, name);
      continue;
    }
    records.push_back({name, OrgType::kFederal, std::nullopt, std::nullopt, ""});
  }

  seen.clear();
  for (const CsvRow &row : ReadCsvRows(thinktanks, "name")) {
    const std::string &name = RequireName(thinktanks, row, 0);
    if (!seen.insert(name).second) {
      warn_dup(thinktanks, name);
      continue;
    }
    std::string region = row.fields.size() > 1 ? row.fields[1] : "";
    records.push_back({name, OrgType::kThinkTank, std::nullopt, std::nullopt,
                       std::move(region)});
  }

  if (warn) {
    for (const std::string &w : warnings) warn(w);
  }
  return Gazetteer(std::move(records), std::move(warnings));
}

size_t Gazetteer::CountType(OrgType type) const {
  return std::count_if(records_.begin(), records_.end(),
                       [type](const OrgRecord &r) { return r.type == type; });
}

std::vector<const OrgRecord *> Gazetteer::WorldRanked() const {
  std::vector<const OrgRecord *> out;
  for (const OrgRecord &r : records_) {
    if (r.type == OrgType::kAcademic && r.world_rank) out.push_back(&r);
  }
  std::sort(out.begin(), out.end(), [](const OrgRecord *a, const OrgRecord *b) {
    return std::tie(*a->world_rank, a->name) < std::tie(*b->world_rank, b->name);
  });
  return out;
}

std::vector<const OrgRecord *> Gazetteer::PublicHealthRanked() const {
  std::vector<const OrgRecord *> out;
  for (const OrgRecord &r : records_) {
    if (r.type == OrgType::kAcademic && r.public_health_rank) out.push_back(&r);
  }
  std::sort(out.begin(), out.end(), [](const OrgRecord *a, const OrgRecord *b) {
    return std::tie(*a->public_health_rank, a->name) <
           std::tie(*b->public_health_rank, b->name);
  });
  return out;
}

const OrgRecord *Gazetteer::FindExact(OrgType type, std::string_view name) const {
  for (const OrgRecord &r : records_) {
    if (r.type == type && r.name == name) return &r;
  }
  return nullptr;
}

std::optional<OrgLink> Gazetteer::Link(std::string_view mention) const {
  std::string_view trimmed = Trim(mention);
  if (IsIgnorableOrgName(trimmed)) return std::nullopt;
  std::vector<std::string> tokens = SortedUniqueTokens(trimmed);

  struct Candidate {
    const OrgRecord *record;
    int score;
    int sort_score;
  };
  std::vector<Candidate> best;
  int best_score = kMatchThreshold;
  for (size_t i = 0; i < records_.size(); ++i) {
    int score = TokenSetScore(tokens, record_tokens_[i], best_score);
    if (score < best_score) continue;
    if (score > best_score) best.clear();
    best_score = score;
    best.push_back({&records_[i], score, 0});
  }
  if (best.empty()) return std::nullopt;
  for (Candidate &c : best) c.sort_score = TokenSortSimilarity(trimmed, c.record->name);
  auto winner = std::min_element(
      best.begin(), best.end(), [](const Candidate &a, const Candidate &b) {
        return std::make_tuple(static_cast<int>(a.record->type), -a.sort_score,
                               std::string_view(a.record->name)) <
               std::make_tuple(static_cast<int>(b.record->type), -b.sort_score,
                               std::string_view(b.record->name));
      });
  return OrgLink{std::string(trimmed), winner->record, winner->score};
}

std::optional<OrgLink> LinkOrg(std::string_view mention,
                               const Gazetteer &gazetteer) {
  return gazetteer.Link(mention);
}

}  // namespace expertaudit
