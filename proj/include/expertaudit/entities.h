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

// Gazetteer and heuristic named-entity recognition for people and
// organizations, first-name gender classification, and deduplication of
// speakers into unique experts.

#ifndef EXPERTAUDIT_ENTITIES_H_
#define EXPERTAUDIT_ENTITIES_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "expertaudit/text.h"

namespace expertaudit {

enum class RawGender { kMale, kFemale, kAndy, kUnknown };
enum class Gender { kMan, kWoman, kUnknown };

std::string_view RawGenderName(RawGender g);   // "male", "female", ...
std::string_view GenderName(Gender g);         // "man", "woman", "unknown"
std::optional<RawGender> ParseRawGender(std::string_view name);
std::optional<Gender> ParseGender(std::string_view name);

// Gender label as produced by the name dictionary. The androgynous and
// unknown categories collapse to Unknown in the merged view.
class GenderLabel {
 public:
  constexpr GenderLabel() = default;
  constexpr explicit GenderLabel(RawGender raw) : raw_(raw) {}

  constexpr RawGender raw() const { return raw_; }
  constexpr Gender merged() const {
    switch (raw_) {
      case RawGender::kMale:
        return Gender::kMan;
      case RawGender::kFemale:
        return Gender::kWoman;
      default:
        return Gender::kUnknown;
    }
  }

  friend constexpr bool operator==(GenderLabel, GenderLabel) = default;

 private:
  RawGender raw_ = RawGender::kUnknown;
};

// Name -> raw gender table read from a two-column TSV file
// (name<TAB>male|female|andy|unknown). Lines starting with '#' are comments.
class NameGenderTable {
 public:
  NameGenderTable() = default;

  // `case_sensitive` keeps keys verbatim; otherwise keys are lowercased.
  static NameGenderTable Load(const std::string &path, bool case_sensitive);

  void Add(std::string_view name, RawGender gender);
  std::optional<RawGender> Find(std::string_view name) const;
  bool Contains(std::string_view name) const { return Find(name).has_value(); }
  size_t size() const { return table_.size(); }

 private:
  bool case_sensitive_ = false;
  std::unordered_map<std::string, RawGender> table_;
};

// Word lists and dictionaries that drive recognition and classification.
struct EntityResources {
  NameGenderTable first_names;  // case-insensitive first-name dictionary
  NameGenderTable overrides;    // case-sensitive full-name overrides
  WordList honorifics;          // titles such as "Dr." or "President"
  WordList stoplist;            // capitalized words that never start a name
  WordList org_cues;            // "University", "Institute", ...

  // Loads names_gender.tsv, manual_overrides.tsv, honorifics.txt,
  // stoplist.txt and org_cues.txt from `dir`.
  static EntityResources LoadDirectory(const std::string &dir);
};

// Title-case name with leading honorifics removed. Empty if nothing is left.
std::string StripHonorifics(std::string_view name, const WordList &honorifics);

// Overrides match the full name exactly (case-sensitive); otherwise the first
// whitespace-separated token after honorifics is looked up case-insensitively.
// Throws std::invalid_argument for an empty name.
GenderLabel ClassifyGender(std::string_view name,
                           const NameGenderTable &first_names,
                           const NameGenderTable &overrides,
                           const WordList *honorifics = nullptr);
GenderLabel ClassifyGender(std::string_view name, const EntityResources &res);

struct PersonMention {
  std::string text;
  TextSpan span;
  std::string first_token;
};

struct OrgMention {
  std::string text;
  TextSpan span;
};

// Finds person names as runs of one to four capitalized tokens that follow an
// honorific, or that start with a dictionary first name. Stoplisted words
// never start or continue a name, and runs containing an organization cue
// word are not people.
class PersonFinder {
 public:
  explicit PersonFinder(const EntityResources &resources)
      : res_(&resources) {}

  std::vector<PersonMention> Find(std::string_view sentence) const;

 private:
  const EntityResources *res_;
};

// Finds organization names two ways:
//  - spans whose sorted tokens match a known name at >= 90 (known names are
//    the gazetteer entries plus extra names such as news outlets and common
//    acronyms; single-token names must match exactly, case included);
//  - capitalized runs built around a cue word ("Harvard University",
//    "National Institutes of Health").
// Overlaps resolve to the longer span; names of two letters or fewer are
// dropped.
class OrgFinder {
 public:
  OrgFinder(const std::vector<std::string> &known_names,
            const EntityResources &resources);

  std::vector<OrgMention> Find(std::string_view sentence) const;

 private:
  struct KnownName {
    std::string sorted_joined;  // token-sorted lowercase form
    size_t content_tokens = 0;
  };

  void FindKnown(std::string_view sentence, const std::vector<Token> &tokens,
                 std::vector<OrgMention> *out) const;
  void FindCued(std::string_view sentence, const std::vector<Token> &tokens,
                std::vector<OrgMention> *out) const;

  const EntityResources *res_;
  std::vector<KnownName> known_;
  // Lowercase content token -> indexes into known_.
  std::unordered_map<std::string, std::vector<size_t>> index_;
  // Single-token names, matched verbatim.
  std::unordered_map<std::string, size_t> exact_single_;
};

struct UniqueExpert {
  std::string canonical_name;  // first-seen form
  int mention_count = 0;
  GenderLabel gender;          // see GenderPolicy
  std::vector<std::string> aliases;  // distinct non-canonical forms seen
  std::vector<size_t> mention_indexes;  // positions in the input list
};

struct NamedMention {
  std::string name;
  GenderLabel gender;
};

enum class GenderPolicy {
  kFirstMention,  // the expert takes the gender of its first mention
  kMajority,      // most frequent merged gender among its mentions
};

// Single pass in input order: each name joins the first earlier expert whose
// canonical name scores >= 90 on token-set similarity, else founds a new one.
std::vector<UniqueExpert> ResolveUniqueExperts(
    const std::vector<NamedMention> &mentions,
    GenderPolicy policy = GenderPolicy::kFirstMention);
std::vector<UniqueExpert> ResolveUniqueExperts(
    const std::vector<std::string> &names);

}  // namespace expertaudit

#endif  // EXPERTAUDIT_ENTITIES_H_
