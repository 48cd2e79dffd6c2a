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

// Expert-quote detection.
//
// Three detectors each propose at most one candidate per sentence:
//
//   DirectPattern      "<speech>," said|say|says <speaker...>
//   ClausalComplement  <subject> <reporting verb> <content clause>, with the
//                      subject before the verb or, after a quotation,
//                      inverted behind it
//   AccordingTo        <speech>, according to <source>  (either order)
//
// A candidate records where the reported speech, the reporting verb and the
// attribution (the text expected to name the speaker) sit in the sentence.
// UnionCandidates then resolves people and organizations inside those
// regions, drops candidates lacking either, and merges detections of the
// same quotation.

#ifndef EXPERTAUDIT_EXTRACT_H_
#define EXPERTAUDIT_EXTRACT_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expertaudit/corpus.h"
#include "expertaudit/entities.h"
#include "expertaudit/text.h"

namespace expertaudit {

enum class Detector : uint8_t {
  kDirectPattern = 1,
  kClausalComplement = 2,
  kAccordingTo = 4,
};

inline constexpr Detector kAllDetectors[] = {
    Detector::kDirectPattern, Detector::kClausalComplement,
    Detector::kAccordingTo};

std::string_view DetectorName(Detector d);

// Small bit set of detectors.
class DetectorSet {
 public:
  constexpr DetectorSet() = default;
  constexpr DetectorSet(Detector d) : bits_(static_cast<uint8_t>(d)) {}

  constexpr void Add(Detector d) { bits_ |= static_cast<uint8_t>(d); }
  constexpr void Add(DetectorSet s) { bits_ |= s.bits_; }
  constexpr bool Contains(Detector d) const {
    return bits_ & static_cast<uint8_t>(d);
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr uint8_t bits() const { return bits_; }

  // "ClausalComplement+DirectPattern"-style label, names in fixed order.
  std::string Label() const;
  std::vector<std::string> Names() const;
  static std::optional<DetectorSet> FromNames(
      const std::vector<std::string> &names);

  friend constexpr bool operator==(DetectorSet, DetectorSet) = default;

 private:
  uint8_t bits_ = 0;
};

struct QuoteCandidate {
  std::string article_id;
  int sentence_index = 0;

  std::string rspeech;
  TextSpan rspeech_span;
  bool rspeech_quoted = false;  // delimited by quotation marks
  std::string rverb;
  TextSpan rverb_span;
  // Region expected to hold the speaker (and usually the organization).
  std::string attribution;
  TextSpan attribution_span;

  std::optional<std::string> speaker_text;
  std::optional<TextSpan> speaker_span;
  std::optional<std::string> org_text;
  std::optional<TextSpan> org_span;

  DetectorSet detectors;
};

// Reporting verbs and phrases, one lowercase entry per line.
class ReportingVerbLexicon {
 public:
  ReportingVerbLexicon() = default;
  explicit ReportingVerbLexicon(std::vector<std::string> entries);

  static ReportingVerbLexicon Load(const std::string &path);

  size_t size() const { return entries_.size(); }
  bool Contains(std::string_view verb) const;
  // Longest lexicon entry (possibly several words) starting at token `i`,
  // measured in tokens; 0 if none. Case-insensitive.
  size_t MatchAt(const std::vector<Token> &tokens, size_t i) const;

 private:
  std::vector<std::string> entries_;
  WordList single_;
  std::vector<std::vector<std::string>> phrases_;
};

class QuoteDetector {
 public:
  virtual ~QuoteDetector() = default;
  virtual Detector kind() const = 0;
  virtual std::optional<QuoteCandidate> Detect(const Sentence &sentence) const = 0;
};

std::optional<QuoteCandidate> DetectDirectPattern(const Sentence &sentence);
std::optional<QuoteCandidate> DetectClausalComplement(
    const Sentence &sentence, const ReportingVerbLexicon &lexicon,
    const WordList &stoplist);
std::optional<QuoteCandidate> DetectAccordingTo(const Sentence &sentence);

class DirectPatternDetector : public QuoteDetector {
 public:
  Detector kind() const override { return Detector::kDirectPattern; }
  std::optional<QuoteCandidate> Detect(const Sentence &sentence) const override {
    return DetectDirectPattern(sentence);
  }
};

class ClausalComplementDetector : public QuoteDetector {
 public:
  ClausalComplementDetector(const ReportingVerbLexicon &lexicon,
                            const WordList &stoplist)
      : lexicon_(&lexicon), stoplist_(&stoplist) {}
  Detector kind() const override { return Detector::kClausalComplement; }
  std::optional<QuoteCandidate> Detect(const Sentence &sentence) const override {
    return DetectClausalComplement(sentence, *lexicon_, *stoplist_);
  }

 private:
  const ReportingVerbLexicon *lexicon_;
  const WordList *stoplist_;
};

class AccordingToDetector : public QuoteDetector {
 public:
  Detector kind() const override { return Detector::kAccordingTo; }
  std::optional<QuoteCandidate> Detect(const Sentence &sentence) const override {
    return DetectAccordingTo(sentence);
  }
};

// Runs every detector on the sentence, in order.
std::vector<QuoteCandidate> DetectAll(
    const Sentence &sentence,
    const std::vector<std::unique_ptr<QuoteDetector>> &detectors);

struct UnionOptions {
  // Self names of the outlet that published the article.
  std::vector<std::string> outlet_names;
  // Organizations matching an outlet name at >= 90 are not affiliations.
  bool suppress_outlet = true;
};

// Resolves the speaker (first person inside the attribution region) and the
// organization (first organization inside the attribution region, else the
// one closest to the speaker, never inside quoted speech) for each
// candidate; drops candidates missing either; then merges candidates whose
// speech spans overlap, keeping the fields of the highest-priority detector
// (DirectPattern, ClausalComplement, AccordingTo) and the union of tags.
// The result is ordered by speech span.
std::vector<QuoteCandidate> UnionCandidates(
    std::vector<QuoteCandidate> candidates,
    const std::vector<PersonMention> &persons,
    const std::vector<OrgMention> &orgs, const UnionOptions &options = {});

}  // namespace expertaudit

#endif  // EXPERTAUDIT_EXTRACT_H_
