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

// Extraction pipeline: articles -> sentences -> quote candidates -> enriched
// expert mentions, plus the mentions.jsonl intermediate format.

#ifndef EXPERTAUDIT_PIPELINE_H_
#define EXPERTAUDIT_PIPELINE_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "expertaudit/corpus.h"
#include "expertaudit/entities.h"
#include "expertaudit/extract.h"
#include "expertaudit/orglink.h"

namespace expertaudit {

// Self-contained copy of the linked gazetteer record.
struct LinkedOrg {
  std::string name;
  OrgType type = OrgType::kAcademic;
  int score = 0;
  std::optional<int> world_rank;
  std::optional<int> public_health_rank;
};

struct ExpertMention {
  std::string article_id;
  int sentence_index = 0;
  std::string source;  // outlet key
  std::string speaker;
  GenderLabel gender;
  std::string org;
  std::optional<LinkedOrg> org_link;
  DetectorSet detectors;
  int sentence_char_length = 0;  // code points
  std::string sentence_text;
  std::string rspeech;
  std::string rverb;
};

// Number of UTF-8 code points (continuation bytes are not counted).
int Utf8Length(std::string_view text);

// One JSON object per line, keys in a fixed order.
std::string MentionToJsonLine(const ExpertMention &mention);
// Throws std::invalid_argument for malformed lines.
ExpertMention MentionFromJsonLine(std::string_view line);

void WriteMentionsJsonl(const std::vector<ExpertMention> &mentions,
                        const std::string &path);
std::vector<ExpertMention> ReadMentionsJsonl(const std::string &path);

// Everything the extractor needs, loaded once.
struct PipelineResources {
  EntityResources entities;
  ReportingVerbLexicon lexicon;
  Gazetteer gazetteer;
  SourceConfig sources;
  // Extra organization names for detection only (acronyms, outlets).
  std::vector<std::string> known_orgs;

  // `lexicon_dir` holds reporting_verbs.txt, known_orgs.txt and the entity
  // word lists; `gazetteer_dir` the four gazetteer files.
  static std::unique_ptr<PipelineResources> Load(
      const std::string &lexicon_dir, const std::string &gazetteer_dir,
      const std::string &sources_path, WarningSink warn = StderrWarnings());
};

struct ExtractOptions {
  bool suppress_outlet = true;
  int threads = 1;
};

struct ExtractStats {
  int64_t articles = 0;
  int64_t articles_unknown_source = 0;
  int64_t sentences = 0;
  int64_t candidates = 0;  // detector hits before the entity filter
  int64_t mentions = 0;
};

class Extractor {
 public:
  Extractor(const PipelineResources &resources, ExtractOptions options = {});

  // Mentions in (sentence index, speech span) order. Articles from outlets
  // missing in the source config yield nothing.
  std::vector<ExpertMention> ExtractArticle(const Article &article,
                                            ExtractStats *stats = nullptr) const;

  // All articles, ordered by (article id, sentence index). Runs on
  // `options.threads` workers; the output does not depend on the count.
  std::vector<ExpertMention> ExtractAll(const std::vector<Article> &articles,
                                        ExtractStats *stats = nullptr,
                                        WarningSink warn = StderrWarnings()) const;

 private:
  const PipelineResources *res_;
  ExtractOptions options_;
  PersonFinder persons_;
  OrgFinder orgs_;
  std::vector<std::unique_ptr<QuoteDetector>> detectors_;
};

}  // namespace expertaudit

#endif  // EXPERTAUDIT_PIPELINE_H_
