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

#include "expertaudit/text.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace expertaudit {
namespace {

// Length of the UTF-8 sequence at `i` if it encodes general punctuation
// (U+2000..U+206F: dashes, curly quotes, ellipsis), else 0.
size_t GeneralPunctuationLength(std::string_view text, size_t i) {
  if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2) {
    unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
    if (b1 == 0x80 || b1 == 0x81) return 3;
  }
  return 0;
}

bool IsWordByte(std::string_view text, size_t i) {
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (c < 0x80) return IsAsciiAlnum(static_cast<char>(c));
  // Continuation bytes of a punctuation sequence are handled by the caller.
  return GeneralPunctuationLength(text, i) == 0;
}

}  // namespace

std::vector<Token> TokenizeWords(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    size_t skip = GeneralPunctuationLength(text, i);
    if (skip > 0) {
      i += skip;
      continue;
    }
    if (!IsWordByte(text, i)) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < n) {
      if (GeneralPunctuationLength(text, i) > 0) break;
      if (IsWordByte(text, i)) {
        ++i;
        continue;
      }
      // Internal apostrophe or hyphen joins two word parts.
      if ((text[i] == '\'' || text[i] == '-') && i + 1 < n &&
          IsWordByte(text, i + 1) && GeneralPunctuationLength(text, i + 1) == 0) {
        ++i;
        continue;
      }
      break;
    }
    tokens.push_back({text.substr(start, i - start), {start, i}});
  }
  return tokens;
}

std::vector<std::string> SimilarityTokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    unsigned char u = static_cast<unsigned char>(c);
    if (IsAsciiAlnum(c) || u >= 0x80) {
      current.push_back(IsAsciiUpper(c) ? static_cast<char>(c - 'A' + 'a') : c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (IsAsciiUpper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view Trim(std::string_view text) {
  size_t b = 0;
  while (b < text.size() && IsSpace(text[b])) ++b;
  size_t e = text.size();
  while (e > b && IsSpace(text[e - 1])) --e;
  return text.substr(b, e - b);
}

TextSpan TrimSpan(std::string_view text, TextSpan span) {
  while (span.begin < span.end && IsSpace(text[span.begin])) ++span.begin;
  while (span.end > span.begin && IsSpace(text[span.end - 1])) --span.end;
  return span;
}

size_t NormalizeDoubleQuotes(std::string &text) {
  size_t replaced = 0;
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(text[i + 2]) == 0x9C ||
         static_cast<unsigned char>(text[i + 2]) == 0x9D)) {
      out.push_back('"');
      i += 2;
      ++replaced;
    } else {
      out.push_back(text[i]);
    }
  }
  if (replaced > 0) text = std::move(out);
  return replaced;
}

std::vector<QuotedRegion> FindQuotedRegions(std::string_view text) {
  std::vector<QuotedRegion> regions;
  bool open = false;
  size_t open_at = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '"') continue;
    if (!open) {
      open = true;
      open_at = i;
    } else {
      regions.push_back({open_at, i});
      open = false;
    }
  }
  return regions;
}

bool OverlapsQuotedRegion(const std::vector<QuotedRegion> &regions,
                          TextSpan span) {
  for (const QuotedRegion &r : regions) {
    if (r.with_marks().Overlaps(span)) return true;
  }
  return false;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> ReadListFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view entry = Trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    entries.emplace_back(entry);
  }
  return entries;
}

WordList::WordList(std::vector<std::string> entries) {
  for (std::string &e : entries) {
    if (set_.insert(e).second) entries_.push_back(std::move(e));
  }
}

WordList WordList::Load(const std::string &path) {
  return WordList(ReadListFile(path));
}

}  // namespace expertaudit
