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

// News article ingestion and sentence segmentation.
//
// Articles arrive as newline-delimited JSON with the fields id, source,
// published_at, title and body. Curly double quotes are folded to '"' on
// ingestion so every downstream pattern deals with a single quote character.

#ifndef EXPERTAUDIT_CORPUS_H_
#define EXPERTAUDIT_CORPUS_H_

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "expertaudit/text.h"

namespace expertaudit {

using Timestamp = std::chrono::sys_seconds;

// Parses "YYYY-MM-DDTHH:MM:SS[.fff]Z" (or a "+00:00" suffix).
std::optional<Timestamp> ParseUtcTimestamp(std::string_view text);
std::string FormatUtcTimestamp(Timestamp ts);

struct Article {
  std::string id;
  std::string source;
  Timestamp published_at;
  std::string title;
  std::string body;
};

enum class Ideology { kLeft, kRight };

std::string_view IdeologyName(Ideology ideology);
std::optional<Ideology> ParseIdeology(std::string_view name);

struct Outlet {
  std::string key;
  std::string display_name;
  Ideology ideology = Ideology::kLeft;
  std::vector<std::string> self_org_names;
};

// Outlet key -> metadata, loaded from a JSON object of the form
//   {"nyt": {"display_name": "...", "ideology": "left",
//            "self_org_names": ["The New York Times"]}, ...}
class SourceConfig {
 public:
  SourceConfig() = default;

  static SourceConfig Load(const std::string &path);
  static SourceConfig FromJson(std::string_view json_text);

  void Add(Outlet outlet);

  const Outlet *Find(std::string_view key) const;
  const std::map<std::string, Outlet, std::less<>> &outlets() const {
    return outlets_;
  }
  // Left outlets first, then right; alphabetical by key within a group.
  std::vector<const Outlet *> Ordered() const;
  // All self names across outlets, for organization detection.
  std::vector<std::string> AllSelfOrgNames() const;

 private:
  std::map<std::string, Outlet, std::less<>> outlets_;
};

struct Sentence {
  std::string article_id;
  int index = 0;
  TextSpan span;  // byte offsets into the article body
  std::string text;
};

// Called with a human-readable message for every skipped input line.
using WarningSink = std::function<void(const std::string &)>;
WarningSink StderrWarnings();

struct ReaderStats {
  int64_t lines = 0;
  int64_t articles = 0;
  int64_t missing_fields = 0;  // well-formed JSON lacking a required field
  int64_t malformed = 0;       // not JSON, not an object, bad timestamp
  int64_t duplicate_ids = 0;

  int64_t skipped() const { return missing_fields + malformed + duplicate_ids; }
};

// Lazily reads Articles from a JSONL file. Bad lines are reported to the
// warning sink and skipped.
class ArticleReader {
 public:
  // Throws std::runtime_error if the file cannot be opened.
  explicit ArticleReader(const std::string &path,
                         WarningSink warn = StderrWarnings());

  std::optional<Article> Next();
  const ReaderStats &stats() const { return stats_; }

 private:
  std::optional<Article> ParseLine(const std::string &line);

  std::string path_;
  std::ifstream in_;
  WarningSink warn_;
  ReaderStats stats_;
  std::unordered_set<std::string> seen_ids_;
};

std::vector<Article> ReadArticles(const std::string &path,
                                  ReaderStats *stats = nullptr,
                                  WarningSink warn = StderrWarnings());

// Abbreviations after which a period never ends a sentence.
const WordList &DefaultAbbreviations();

// Splits `body` at '.', '!' or '?' followed by whitespace and an uppercase
// letter or '"'. No split happens inside a paired double-quoted region or
// after a listed abbreviation or a single-letter initial. Closing quotes and
// parentheses directly after the terminator stay with the sentence. Sentence
// spans are trimmed of surrounding whitespace.
std::vector<TextSpan> SegmentSpans(std::string_view body,
                                   const WordList &abbreviations);
std::vector<TextSpan> SegmentSpans(std::string_view body);

std::vector<Sentence> SegmentSentences(std::string_view body);
std::vector<Sentence> SegmentArticle(const Article &article);

}  // namespace expertaudit

#endif  // EXPERTAUDIT_CORPUS_H_
