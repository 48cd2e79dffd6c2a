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

#include "expertaudit/corpus.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace expertaudit {
namespace {

using nlohmann::json;

bool ParseFixedInt(std::string_view text, size_t pos, size_t len, int *out) {
  if (pos + len > text.size()) return false;
  for (size_t i = pos; i < pos + len; ++i) {
    if (!IsAsciiDigit(text[i])) return false;
  }
  auto result = std::from_chars(text.data() + pos, text.data() + pos + len, *out);
  return result.ec == std::errc();
}

const std::string *StringField(const json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) return nullptr;
  return it->get_ptr<const std::string *>();
}

}  // namespace

std::optional<Timestamp> ParseUtcTimestamp(std::string_view text) {
  // YYYY-MM-DDTHH:MM:SS
  int y, mo, d, h, mi, s;
  if (text.size() < 20) return std::nullopt;
  if (!ParseFixedInt(text, 0, 4, &y) || text[4] != '-' ||
      !ParseFixedInt(text, 5, 2, &mo) || text[7] != '-' ||
      !ParseFixedInt(text, 8, 2, &d) || (text[10] != 'T' && text[10] != ' ') ||
      !ParseFixedInt(text, 11, 2, &h) || text[13] != ':' ||
      !ParseFixedInt(text, 14, 2, &mi) || text[16] != ':' ||
      !ParseFixedInt(text, 17, 2, &s)) {
    return std::nullopt;
  }
  size_t pos = 19;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    size_t digits = 0;
    while (pos < text.size() && IsAsciiDigit(text[pos])) ++pos, ++digits;
    if (digits == 0) return std::nullopt;
  }
  std::string_view zone = text.substr(pos);
  if (zone != "Z" && zone != "+00:00") return std::nullopt;
  if (h > 23 || mi > 59 || s > 60) return std::nullopt;

  std::chrono::year_month_day ymd{std::chrono::year{y},
                                  std::chrono::month{static_cast<unsigned>(mo)},
                                  std::chrono::day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) return std::nullopt;
  return std::chrono::sys_days{ymd} + std::chrono::hours{h} +
         std::chrono::minutes{mi} + std::chrono::seconds{s};
}

std::string FormatUtcTimestamp(Timestamp ts) {
  auto days = std::chrono::floor<std::chrono::days>(ts);
  std::chrono::year_month_day ymd{days};
  std::chrono::hh_mm_ss hms{ts - days};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()),
                static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

std::string_view IdeologyName(Ideology ideology) {
  return ideology == Ideology::kLeft ? "left" : "right";
}

std::optional<Ideology> ParseIdeology(std::string_view name) {
  std::string lower = AsciiLower(name);
  if (lower == "left") return Ideology::kLeft;
  if (lower == "right") return Ideology::kRight;
  return std::nullopt;
}

SourceConfig SourceConfig::Load(const std::string &path) {
  try {
    return FromJson(ReadFile(path));
  } catch (const std::invalid_argument &e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

SourceConfig SourceConfig::FromJson(std::string_view json_text) {
  json root = json::parse(json_text, nullptr, /*allow_exceptions=*/false,
                          /*ignore_comments=*/true);
  if (root.is_discarded() || !root.is_object()) {
    throw std::invalid_argument("source config must be a JSON object");
  }
  SourceConfig config;
  for (const auto &[key, value] : root.items()) {
    if (!value.is_object()) {
      throw std::invalid_argument("outlet '" + key + "' must be an object");
    }
    Outlet outlet;
    outlet.key = key;
    const std::string *display = StringField(value, "display_name");
    outlet.display_name = display ? *display : key;
    const std::string *ideology = StringField(value, "ideology");
    std::optional<Ideology> parsed =
        ideology ? ParseIdeology(*ideology) : std::nullopt;
    if (!parsed) {
      throw std::invalid_argument("outlet '" + key +
                                  "' needs ideology \"left\" or \"right\"");
    }
    outlet.ideology = *parsed;
    auto names = value.find("self_org_names");
    if (names != value.end() && names->is_array()) {
      for (const auto &n : *names) {
        if (n.is_string() && !Trim(n.get<std::string>()).empty()) {
          outlet.self_org_names.push_back(n.get<std::string>());
        }
      }
    }
    config.Add(std::move(outlet));
  }
  return config;
}

void SourceConfig::Add(Outlet outlet) {
  if (outlet.key.empty()) throw std::invalid_argument("empty outlet key");
  if (outlet.self_org_names.empty()) {
    throw std::invalid_argument("outlet '" + outlet.key +
                                "' needs at least one self_org_names entry");
  }
  std::string key = outlet.key;
  outlets_.insert_or_assign(std::move(key), std::move(outlet));
}

const Outlet *SourceConfig::Find(std::string_view key) const {
  auto it = outlets_.find(key);
  return it == outlets_.end() ? nullptr : &it->second;
}

std::vector<const Outlet *> SourceConfig::Ordered() const {
  std::vector<const Outlet *> out;
  for (const auto &[key, outlet] : outlets_) out.push_back(&outlet);
  std::stable_sort(out.begin(), out.end(), [](const Outlet *a, const Outlet *b) {
    return a->ideology == Ideology::kLeft && b->ideology == Ideology::kRight;
  });
  return out;
}

std::vector<std::string> SourceConfig::AllSelfOrgNames() const {
  std::vector<std::string> names;
  for (const auto &[key, outlet] : outlets_) {
    names.insert(names.end(), outlet.self_org_names.begin(),
                 outlet.self_org_names.end());
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

WarningSink StderrWarnings() {
  return [](const std::string &msg) { std::cerr << "warning: " << msg << "\n"; };
}

ArticleReader::ArticleReader(const std::string &path, WarningSink warn)
    : path_(path), in_(path), warn_(std::move(warn)) {
  if (!in_) throw std::runtime_error("cannot open corpus file " + path);
}

std::optional<Article> ArticleReader::Next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++stats_.lines;
    if (Trim(line).empty()) continue;
    if (std::optional<Article> article = ParseLine(line)) {
      ++stats_.articles;
      return article;
    }
  }
  if (in_.bad()) throw std::runtime_error("error reading " + path_);
  return std::nullopt;
}

std::optional<Article> ArticleReader::ParseLine(const std::string &line) {
  auto where = [&] { return path_ + ":" + std::to_string(stats_.lines); };
  json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) {
    ++stats_.malformed;
    if (warn_) warn_(where() + ": not a JSON object, skipped");
    return std::nullopt;
  }
  static constexpr const char *kRequired[] = {"id", "source", "published_at",
                                              "title", "body"};
  for (const char *key : kRequired) {
    if (StringField(obj, key) == nullptr) {
      ++stats_.missing_fields;
      if (warn_) {
        warn_(where() + ": missing string field \"" + key + "\", skipped");
      }
      return std::nullopt;
    }
  }
  Article article;
  article.id = *StringField(obj, "id");
  if (article.id.empty()) {
    ++stats_.missing_fields;
    if (warn_) warn_(where() + ": empty id, skipped");
    return std::nullopt;
  }
  std::optional<Timestamp> ts = ParseUtcTimestamp(*StringField(obj, "published_at"));
  if (!ts) {
    ++stats_.malformed;
    if (warn_) warn_(where() + ": bad published_at timestamp, skipped");
    return std::nullopt;
  }
  if (!seen_ids_.insert(article.id).second) {
    ++stats_.duplicate_ids;
    if (warn_) warn_(where() + ": duplicate id '" + article.id + "', skipped");
    return std::nullopt;
  }
  article.source = *StringField(obj, "source");
  article.published_at = *ts;
  article.title = *StringField(obj, "title");
  article.body = *StringField(obj, "body");
  NormalizeDoubleQuotes(article.title);
  NormalizeDoubleQuotes(article.body);
  return article;
}

std::vector<Article> ReadArticles(const std::string &path, ReaderStats *stats,
                                  WarningSink warn) {
  ArticleReader reader(path, std::move(warn));
  std::vector<Article> articles;
  while (std::optional<Article> a = reader.Next()) articles.push_back(std::move(*a));
  if (stats) *stats = reader.stats();
  return articles;
}

const WordList &DefaultAbbreviations() {
  static const WordList *list = new WordList({
      "Dr.", "Mr.", "Ms.", "Mrs.", "Gov.", "Sen.", "Rep.", "St.", "U.S.",
      "Inc.", "No.", "Prof.", "Jr.", "Sr.", "Lt.", "Gen.", "Col.", "Sgt.",
      "Capt.", "Corp.", "Co.", "Ltd.", "Mt.", "Ave.", "U.K.", "U.N.", "D.C.",
      "a.m.", "p.m.", "e.g.", "i.e.", "vs.", "Rev.", "Jan.", "Feb.", "Aug.",
      "Sept.", "Oct.", "Nov.", "Dec."});
  return *list;
}

namespace {

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

// The whitespace-delimited word ending at `end` (exclusive), without leading
// opening punctuation.
std::string_view WordEndingAt(std::string_view text, size_t end) {
  size_t b = end;
  while (b > 0 && !IsSpace(text[b - 1])) --b;
  while (b < end && (text[b] == '"' || text[b] == '(' || text[b] == '\'')) ++b;
  return text.substr(b, end - b);
}

bool IsAbbreviation(std::string_view word, const WordList &abbreviations) {
  if (abbreviations.Contains(word)) return true;
  // Single-letter initial such as the "F." in "Robert F. Kennedy".
  return word.size() == 2 && IsAsciiUpper(word[0]) && word[1] == '.';
}

}  // namespace

std::vector<TextSpan> SegmentSpans(std::string_view body,
                                   const WordList &abbreviations) {
  std::vector<TextSpan> spans;
  const size_t n = body.size();
  std::vector<QuotedRegion> regions = FindQuotedRegions(body);

  // closing_mark[i] is true when body[i] closes a paired region.
  std::vector<bool> closing_mark(n, false);
  for (const QuotedRegion &r : regions) closing_mark[r.close] = true;

  // A boundary after position b-1 is inside a region if open < b <= close.
  size_t region_cursor = 0;
  auto boundary_inside_region = [&](size_t b) {
    while (region_cursor < regions.size() && regions[region_cursor].close < b) {
      ++region_cursor;
    }
    for (size_t r = region_cursor; r < regions.size(); ++r) {
      if (regions[r].open >= b) break;
      if (regions[r].open < b && b <= regions[r].close) return true;
    }
    return false;
  };

  size_t start = 0;
  while (start < n && IsSpace(body[start])) ++start;
  size_t i = start;
  while (i < n) {
    if (!IsTerminator(body[i])) {
      ++i;
      continue;
    }
    size_t last_term = i;
    while (last_term + 1 < n && IsTerminator(body[last_term + 1])) ++last_term;
    size_t j = last_term + 1;
    while (j < n && ((body[j] == '"' && closing_mark[j]) || body[j] == ')' ||
                     body[j] == '\'')) {
      ++j;
    }
    size_t next = j;
    while (next < n && IsSpace(body[next])) ++next;
    bool split = j < n && IsSpace(body[j]) && next < n &&
                 (IsAsciiUpper(body[next]) || body[next] == '"');
    if (split && body[last_term] == '.' && last_term == i &&
        IsAbbreviation(WordEndingAt(body, i + 1), abbreviations)) {
      split = false;
    }
    if (split && boundary_inside_region(j)) split = false;
    if (split) {
      spans.push_back(TrimSpan(body, {start, j}));
      start = next;
      i = next;
    } else {
      i = last_term + 1;
    }
  }
  if (start < n) {
    TextSpan tail = TrimSpan(body, {start, n});
    if (!tail.empty()) spans.push_back(tail);
  }
  return spans;
}

std::vector<TextSpan> SegmentSpans(std::string_view body) {
  return SegmentSpans(body, DefaultAbbreviations());
}

std::vector<Sentence> SegmentSentences(std::string_view body) {
  std::vector<Sentence> sentences;
  int index = 0;
  for (const TextSpan &span : SegmentSpans(body)) {
    sentences.push_back({"", index++, span, std::string(span.Slice(body))});
  }
  return sentences;
}

std::vector<Sentence> SegmentArticle(const Article &article) {
  std::vector<Sentence> sentences = SegmentSentences(article.body);
  for (Sentence &s : sentences) s.article_id = article.id;
  return sentences;
}

}  // namespace expertaudit
