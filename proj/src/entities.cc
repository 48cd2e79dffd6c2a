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

#include "expertaudit/entities.h"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "expertaudit/orglink.h"

namespace expertaudit {

std::string_view RawGenderName(RawGender g) {
  switch (g) {
    case RawGender::kMale:
      return "male";
    case RawGender::kFemale:
      return "female";
    case RawGender::kAndy:
      return "andy";
    case RawGender::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::string_view GenderName(Gender g) {
  switch (g) {
    case Gender::kMan:
      return "man";
    case Gender::kWoman:
      return "woman";
    case Gender::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::optional<RawGender> ParseRawGender(std::string_view name) {
  std::string lower = AsciiLower(Trim(name));
  if (lower == "male") return RawGender::kMale;
  if (lower == "female") return RawGender::kFemale;
  if (lower == "andy") return RawGender::kAndy;
  if (lower == "unknown") return RawGender::kUnknown;
  return std::nullopt;
}

std::optional<Gender> ParseGender(std::string_view name) {
  std::string lower = AsciiLower(Trim(name));
  if (lower == "man") return Gender::kMan;
  if (lower == "woman") return Gender::kWoman;
  if (lower == "unknown") return Gender::kUnknown;
  return std::nullopt;
}

NameGenderTable NameGenderTable::Load(const std::string &path,
                                      bool case_sensitive) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  NameGenderTable table;
  table.case_sensitive_ = case_sensitive;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    size_t tab = t.find('\t');
    std::optional<RawGender> gender;
    if (tab != std::string_view::npos) gender = ParseRawGender(t.substr(tab + 1));
    if (!gender || Trim(t.substr(0, tab)).empty()) {
      throw std::invalid_argument(path + ":" + std::to_string(line_number) +
                                  ": expected name<TAB>male|female|andy|unknown");
    }
    table.Add(Trim(t.substr(0, tab)), *gender);
  }
  return table;
}

void NameGenderTable::Add(std::string_view name, RawGender gender) {
  std::string key = case_sensitive_ ? std::string(name) : AsciiLower(name);
  table_.emplace(std::move(key), gender);
}

std::optional<RawGender> NameGenderTable::Find(std::string_view name) const {
  auto it = table_.find(case_sensitive_ ? std::string(name) : AsciiLower(name));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

EntityResources EntityResources::LoadDirectory(const std::string &dir) {
  namespace fs = std::filesystem;
  auto path = [&](const char *name) { return (fs::path(dir) / name).string(); };
  EntityResources res;
  res.first_names = NameGenderTable::Load(path("names_gender.tsv"), false);
  res.overrides = NameGenderTable::Load(path("manual_overrides.tsv"), true);
  res.honorifics = WordList::Load(path("honorifics.txt"));
  res.stoplist = WordList::Load(path("stoplist.txt"));
  res.org_cues = WordList::Load(path("org_cues.txt"));
  return res;
}

namespace {

bool IsHonorificToken(std::string_view sentence, const Token &token,
                      const WordList &honorifics) {
  if (honorifics.Contains(token.text)) return true;
  if (token.span.end < sentence.size() && sentence[token.span.end] == '.') {
    return honorifics.Contains(std::string(token.text) + ".");
  }
  return false;
}

// Text between two adjacent tokens.
std::string_view Gap(std::string_view sentence, const Token &a, const Token &b) {
  return sentence.substr(a.span.end, b.span.begin - a.span.end);
}

bool AllSpaces(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return IsSpace(c); });
}

// The gap may join two name tokens: plain whitespace, or ". " after an
// initial ("Robert F. Kennedy").
bool NameGap(std::string_view gap, const Token &prev) {
  if (AllSpaces(gap)) return true;
  bool initial = prev.text.size() == 1 && IsAsciiUpper(prev.text[0]);
  return initial && gap.size() >= 2 && gap[0] == '.' && AllSpaces(gap.substr(1));
}

bool IsNameToken(const Token &token, const EntityResources &res) {
  return IsCapitalized(token.text) && !res.stoplist.Contains(token.text);
}

// Lowercase surname particles, as in "Carlos del Rio" or "Ludwig van Beethoven".
bool IsNameParticle(std::string_view text) {
  static const auto *set = new std::set<std::string, std::less<>>{
      "da", "de", "del", "della", "der", "di", "du", "la", "le", "van", "von"};
  return set->count(text) > 0;
}

std::string_view StripPossessive(std::string_view text) {
  if (text.size() > 2 && text.substr(text.size() - 2) == "'s") {
    return text.substr(0, text.size() - 2);
  }
  return text;
}

}  // namespace

std::string StripHonorifics(std::string_view name, const WordList &honorifics) {
  std::string_view rest = Trim(name);
  while (!rest.empty()) {
    size_t space = rest.find_first_of(" \t");
    std::string_view first = rest.substr(0, space);
    std::string_view bare = first;
    if (!bare.empty() && bare.back() == '.') bare.remove_suffix(1);
    if (!honorifics.Contains(first) && !honorifics.Contains(bare)) break;
    if (space == std::string_view::npos) return "";
    rest = Trim(rest.substr(space));
  }
  return std::string(rest);
}

GenderLabel ClassifyGender(std::string_view name,
                           const NameGenderTable &first_names,
                           const NameGenderTable &overrides,
                           const WordList *honorifics) {
  std::string_view trimmed = Trim(name);
  if (trimmed.empty()) throw std::invalid_argument("empty name");
  if (std::optional<RawGender> g = overrides.Find(trimmed)) return GenderLabel(*g);
  std::string bare =
      honorifics ? StripHonorifics(trimmed, *honorifics) : std::string(trimmed);
  if (bare.empty()) return GenderLabel(RawGender::kUnknown);
  std::string_view first = bare;
  first = first.substr(0, first.find_first_of(" \t"));
  std::optional<RawGender> g = first_names.Find(first);
  return GenderLabel(g.value_or(RawGender::kUnknown));
}

GenderLabel ClassifyGender(std::string_view name, const EntityResources &res) {
  return ClassifyGender(name, res.first_names, res.overrides, &res.honorifics);
}

std::vector<PersonMention> PersonFinder::Find(std::string_view sentence) const {
  const EntityResources &res = *res_;
  std::vector<Token> tokens = TokenizeWords(sentence);
  std::vector<PersonMention> mentions;
  size_t i = 0;
  while (i < tokens.size()) {
    size_t start = tokens.size();
    if (IsHonorificToken(sentence, tokens[i], res.honorifics) &&
        i + 1 < tokens.size() && IsNameToken(tokens[i + 1], res) &&
        !IsHonorificToken(sentence, tokens[i + 1], res.honorifics)) {
      std::string_view gap = Gap(sentence, tokens[i], tokens[i + 1]);
      if (gap.front() == '.') gap.remove_prefix(1);
      if (AllSpaces(gap)) start = i + 1;
    } else if (IsNameToken(tokens[i], res) &&
               res.first_names.Contains(StripPossessive(tokens[i].text))) {
      start = i;
    }
    if (start == tokens.size()) {
      ++i;
      continue;
    }

    size_t end = start + 1;  // exclusive
    auto extends = [&](size_t k) {
      return k < tokens.size() && IsNameToken(tokens[k], res) &&
             !IsHonorificToken(sentence, tokens[k], res.honorifics) &&
             NameGap(Gap(sentence, tokens[k - 1], tokens[k]), tokens[k - 1]) &&
             StripPossessive(tokens[k - 1].text) == tokens[k - 1].text;
    };
    while (end < tokens.size() && end - start < 4) {
      if (extends(end)) {
        ++end;
      } else if (IsNameParticle(tokens[end].text) &&
                 AllSpaces(Gap(sentence, tokens[end - 1], tokens[end])) &&
                 StripPossessive(tokens[end - 1].text) == tokens[end - 1].text &&
                 extends(end + 1)) {
        end += 2;
      } else {
        break;
      }
    }
    bool has_cue = false;
    for (size_t k = start; k < end; ++k) {
      if (res.org_cues.Contains(tokens[k].text)) has_cue = true;
    }
    if (!has_cue) {
      TextSpan span{tokens[start].span.begin, tokens[end - 1].span.end};
      std::string_view last = StripPossessive(tokens[end - 1].text);
      span.end = tokens[end - 1].span.begin + last.size();
      PersonMention m;
      m.text = std::string(span.Slice(sentence));
      m.span = span;
      m.first_token = std::string(StripPossessive(tokens[start].text));
      mentions.push_back(std::move(m));
    }
    i = end;
  }
  return mentions;
}

namespace {

const std::set<std::string, std::less<>> &Connectors() {
  static const auto *set = new std::set<std::string, std::less<>>{
      "of", "for", "and", "the", "on", "at", "in", "de",
      "des", "del", "der", "di", "du", "et", "la", "und", "y"};
  return *set;
}

// Separator allowed inside a known organization name.
bool KnownNameGap(std::string_view gap) {
  if (gap.empty() || gap.size() > 3) return false;
  return std::all_of(gap.begin(), gap.end(), [](char c) {
    return IsSpace(c) || c == ',' || c == '-' || c == '&' || c == '.' ||
           c == '\'';
  });
}

std::string SortedJoined(std::vector<std::string> tokens) {
  std::sort(tokens.begin(), tokens.end());
  std::string out;
  for (const std::string &t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

size_t CountContent(const std::vector<std::string> &lower_tokens) {
  return std::count_if(lower_tokens.begin(), lower_tokens.end(),
                       [](const std::string &t) {
                         return Connectors().count(t) == 0;
                       });
}

constexpr size_t kMaxKnownSpanTokens = 10;

}  // namespace

OrgFinder::OrgFinder(const std::vector<std::string> &known_names,
                     const EntityResources &resources)
    : res_(&resources) {
  std::set<std::string> seen;
  for (const std::string &name : known_names) {
    if (!seen.insert(name).second) continue;
    std::vector<std::string> lower = SimilarityTokens(name);
    if (lower.empty()) continue;
    std::vector<Token> raw = TokenizeWords(name);
    if (raw.size() == 1) {
      exact_single_.emplace(std::string(raw[0].text), known_.size());
    }
    size_t index = known_.size();
    known_.push_back({SortedJoined(lower), CountContent(lower)});
    std::set<std::string> content;
    for (const std::string &t : lower) {
      if (Connectors().count(t) == 0) content.insert(t);
    }
    for (const std::string &t : content) index_[t].push_back(index);
  }
}

void OrgFinder::FindKnown(std::string_view sentence,
                          const std::vector<Token> &tokens,
                          std::vector<OrgMention> *out) const {
  // Runs of capitalized tokens and lowercase connectors.
  size_t i = 0;
  while (i < tokens.size()) {
    auto in_run = [&](size_t k) {
      return IsCapitalized(tokens[k].text) ||
             Connectors().count(std::string(tokens[k].text)) > 0;
    };
    if (!IsCapitalized(tokens[i].text)) {
      ++i;
      continue;
    }
    size_t run_end = i + 1;
    while (run_end < tokens.size() && in_run(run_end) &&
           KnownNameGap(Gap(sentence, tokens[run_end - 1], tokens[run_end]))) {
      ++run_end;
    }
    for (size_t s = i; s < run_end; ++s) {
      if (!IsCapitalized(tokens[s].text)) continue;
      for (size_t e = s; e < run_end && e - s < kMaxKnownSpanTokens; ++e) {
        if (!IsCapitalized(tokens[e].text)) continue;
        TextSpan span{tokens[s].span.begin, tokens[e].span.end};
        if (s == e) {
          if (exact_single_.count(std::string(tokens[s].text))) {
            out->push_back({std::string(span.Slice(sentence)), span});
          }
          continue;
        }
        std::vector<std::string> lower = SimilarityTokens(span.Slice(sentence));
        size_t content = CountContent(lower);
        std::set<size_t> candidates;
        for (const std::string &t : lower) {
          auto it = index_.find(t);
          if (it == index_.end()) continue;
          candidates.insert(it->second.begin(), it->second.end());
        }
        if (candidates.empty()) continue;
        std::string joined = SortedJoined(lower);
        for (size_t c : candidates) {
          const KnownName &known = known_[c];
          if (known.content_tokens + 1 < content ||
              content + 1 < known.content_tokens) {
            continue;
          }
          if (NormalizedRatio(joined, known.sorted_joined) >= kMatchThreshold) {
            out->push_back({std::string(span.Slice(sentence)), span});
            break;
          }
        }
      }
    }
    i = run_end;
  }
}

void OrgFinder::FindCued(std::string_view sentence,
                         const std::vector<Token> &tokens,
                         std::vector<OrgMention> *out) const {
  const EntityResources &res = *res_;
  auto org_word = [&](size_t k) {
    return IsCapitalized(tokens[k].text) && !res.stoplist.Contains(tokens[k].text) &&
           !IsHonorificToken(sentence, tokens[k], res.honorifics);
  };
  auto gap = [&](size_t a, size_t b) { return Gap(sentence, tokens[a], tokens[b]); };

  size_t covered_until = 0;  // token index; cues before this are consumed
  for (size_t c = 0; c < tokens.size(); ++c) {
    if (c < covered_until || !res.org_cues.Contains(tokens[c].text)) continue;

    size_t begin = c;
    while (begin > 0 && begin > covered_until) {
      size_t p = begin - 1;
      std::string_view g = gap(p, begin);
      bool initial = tokens[p].text.size() == 1 && IsAsciiUpper(tokens[p].text[0]);
      if (org_word(p) && (AllSpaces(g) || (initial && (g == "." || g == ". ")) ||
                          g == "&" || g == " & ")) {
        begin = p;
        continue;
      }
      // "Food and Drug Administration"
      if (tokens[p].text == "and" && AllSpaces(g) && p > covered_until &&
          org_word(p - 1) && AllSpaces(gap(p - 1, p))) {
        begin = p - 1;
        continue;
      }
      break;
    }

    size_t end = c + 1;  // exclusive
    while (end < tokens.size()) {
      if (!AllSpaces(gap(end - 1, end))) break;
      std::string_view word = tokens[end].text;
      if (org_word(end)) {
        ++end;
        continue;
      }
      if (word == "of" || word == "for" || word == "on" || word == "and") {
        size_t next = end + 1;
        if (next < tokens.size() && tokens[next].text == "the" && word != "and" &&
            AllSpaces(gap(end, next))) {
          ++next;
        }
        if (next >= tokens.size() || !org_word(next) ||
            !AllSpaces(gap(next - 1, next))) {
          break;
        }
        if (word == "and") {
          // Stop if what follows is a separate cued organization.
          bool separate = false;
          for (size_t k = next; k < tokens.size() && org_word(k); ++k) {
            if (res.org_cues.Contains(tokens[k].text)) separate = true;
            if (k + 1 < tokens.size() && !AllSpaces(gap(k, k + 1))) break;
          }
          if (separate) break;
        }
        end = next + 1;
        continue;
      }
      break;
    }

    covered_until = end;
    if (end - begin < 2) continue;
    TextSpan span{tokens[begin].span.begin, tokens[end - 1].span.end};
    std::string_view last = StripPossessive(tokens[end - 1].text);
    span.end = tokens[end - 1].span.begin + last.size();
    out->push_back({std::string(span.Slice(sentence)), span});
  }
}

std::vector<OrgMention> OrgFinder::Find(std::string_view sentence) const {
  std::vector<Token> tokens = TokenizeWords(sentence);
  std::vector<OrgMention> found;
  FindKnown(sentence, tokens, &found);
  FindCued(sentence, tokens, &found);

  std::sort(found.begin(), found.end(),
            [](const OrgMention &a, const OrgMention &b) {
              if (a.span.size() != b.span.size()) return a.span.size() > b.span.size();
              return a.span.begin < b.span.begin;
            });
  std::vector<OrgMention> kept;
  for (OrgMention &m : found) {
    if (IsIgnorableOrgName(m.text)) continue;
    bool overlaps = std::any_of(kept.begin(), kept.end(), [&](const OrgMention &k) {
      return k.span.Overlaps(m.span);
    });
    if (!overlaps) kept.push_back(std::move(m));
  }
  std::sort(kept.begin(), kept.end(), [](const OrgMention &a, const OrgMention &b) {
    return a.span.begin < b.span.begin;
  });
  return kept;
}

std::vector<UniqueExpert> ResolveUniqueExperts(
    const std::vector<NamedMention> &mentions, GenderPolicy policy) {
  std::vector<UniqueExpert> experts;
  std::vector<std::vector<std::string>> canonical_tokens;
  std::unordered_map<std::string, size_t> assigned;  // name -> expert index
  // Per expert: merged-gender counts and first raw label per merged gender.
  std::vector<std::array<int, 3>> gender_counts;
  std::vector<std::array<std::optional<RawGender>, 3>> first_raw;

  for (size_t m = 0; m < mentions.size(); ++m) {
    const NamedMention &mention = mentions[m];
    size_t target = experts.size();
    if (auto it = assigned.find(mention.name); it != assigned.end()) {
      target = it->second;
    } else {
      std::vector<std::string> tokens = SortedTokenSet(mention.name);
      for (size_t e = 0; e < experts.size(); ++e) {
        if (TokenSetSimilarity(tokens, canonical_tokens[e], kMatchThreshold) >=
            kMatchThreshold) {
          target = e;
          break;
        }
      }
      if (target == experts.size()) {
        UniqueExpert expert;
        expert.canonical_name = mention.name;
        expert.gender = mention.gender;
        experts.push_back(std::move(expert));
        canonical_tokens.push_back(std::move(tokens));
        gender_counts.push_back({0, 0, 0});
        first_raw.push_back({});
      }
      assigned.emplace(mention.name, target);
    }
    UniqueExpert &expert = experts[target];
    ++expert.mention_count;
    expert.mention_indexes.push_back(m);
    if (mention.name != expert.canonical_name &&
        std::find(expert.aliases.begin(), expert.aliases.end(), mention.name) ==
            expert.aliases.end()) {
      expert.aliases.push_back(mention.name);
    }
    size_t g = static_cast<size_t>(mention.gender.merged());
    ++gender_counts[target][g];
    if (!first_raw[target][g]) first_raw[target][g] = mention.gender.raw();
  }

  if (policy == GenderPolicy::kMajority) {
    for (size_t e = 0; e < experts.size(); ++e) {
      // Ties keep the first mention's label.
      size_t first = static_cast<size_t>(experts[e].gender.merged());
      size_t best = first;
      for (size_t g = 0; g < 3; ++g) {
        if (gender_counts[e][g] > gender_counts[e][best]) best = g;
      }
      if (best != first) experts[e].gender = GenderLabel(*first_raw[e][best]);
    }
  }
  return experts;
}

std::vector<UniqueExpert> ResolveUniqueExperts(
    const std::vector<std::string> &names) {
  std::vector<NamedMention> mentions;
  mentions.reserve(names.size());
  for (const std::string &n : names) mentions.push_back({n, GenderLabel()});
  return ResolveUniqueExperts(mentions, GenderPolicy::kFirstMention);
}

}  // namespace expertaudit
