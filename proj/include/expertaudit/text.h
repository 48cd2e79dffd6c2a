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

#ifndef EXPERTAUDIT_TEXT_H_
#define EXPERTAUDIT_TEXT_H_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace expertaudit {

// Half-open byte range [begin, end) into some piece of text.
struct TextSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool empty() const { return end <= begin; }
  bool Contains(const TextSpan &other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool Overlaps(const TextSpan &other) const {
    return begin < other.end && other.begin < end;
  }
  std::string_view Slice(std::string_view text) const {
    return text.substr(begin, end - begin);
  }

  friend auto operator<=>(const TextSpan &, const TextSpan &) = default;
};

// A word token: a maximal run of ASCII alphanumerics and non-ASCII bytes,
// with internal apostrophes and hyphens kept ("O'Brien", "Covid-19").
struct Token {
  std::string_view text;
  TextSpan span;
};

std::vector<Token> TokenizeWords(std::string_view text);

// Lowercase alphanumeric tokens, splitting on everything else. Used for
// similarity scoring and dictionary keys.
std::vector<std::string> SimilarityTokens(std::string_view text);

std::string AsciiLower(std::string_view text);
std::string_view Trim(std::string_view text);
TextSpan TrimSpan(std::string_view text, TextSpan span);

inline bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiAlnum(char c) {
  return IsAsciiUpper(c) || IsAsciiLower(c) || IsAsciiDigit(c);
}
inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// True if the token starts with an uppercase ASCII letter.
// ASCII or Latin-1 uppercase first letter (U+00C0..U+00DE except U+00D7).
inline bool IsCapitalized(std::string_view token) {
  if (token.empty()) return false;
  if (IsAsciiUpper(token.front())) return true;
  if (token.size() < 2 || static_cast<unsigned char>(token[0]) != 0xC3) return false;
  unsigned char c = static_cast<unsigned char>(token[1]);
  return c >= 0x80 && c <= 0x9E && c != 0x97;
}

// Replaces U+201C and U+201D with '"'. Returns the number of replacements.
size_t NormalizeDoubleQuotes(std::string &text);

// A pair of matching '"' marks. `open` and `close` index the marks.
struct QuotedRegion {
  size_t open = 0;
  size_t close = 0;

  TextSpan content() const { return {open + 1, close}; }
  TextSpan with_marks() const { return {open, close + 1}; }
};

// Pairs '"' marks left to right (1st with 2nd, 3rd with 4th, ...). An odd
// trailing mark stays unpaired and opens no region.
std::vector<QuotedRegion> FindQuotedRegions(std::string_view text);

// Returns true if `span` intersects the content or marks of any region.
bool OverlapsQuotedRegion(const std::vector<QuotedRegion> &regions,
                          TextSpan span);

// One entry per non-empty line, '#' comment lines skipped, whitespace trimmed.
std::vector<std::string> ReadListFile(const std::string &path);

// Reads a whole file. Throws std::runtime_error when it cannot be opened.
std::string ReadFile(const std::string &path);

// A set of strings loaded from a one-entry-per-line file.
class WordList {
 public:
  WordList() = default;
  explicit WordList(std::vector<std::string> entries);

  static WordList Load(const std::string &path);

  bool Contains(std::string_view entry) const {
    return set_.count(std::string(entry)) > 0;
  }
  size_t size() const { return entries_.size(); }
  const std::vector<std::string> &entries() const { return entries_; }

 private:
  std::vector<std::string> entries_;
  std::unordered_set<std::string> set_;
};

}  // namespace expertaudit

#endif  // EXPERTAUDIT_TEXT_H_
