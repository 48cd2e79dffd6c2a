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

#include "expertaudit/extract.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "expertaudit/orglink.h"

namespace expertaudit {

std::string_view DetectorName(Detector d) {
  switch (d) {
    case Detector::kDirectPattern:
      return "DirectPattern";
    case Detector::kClausalComplement:
      return "ClausalComplement";
    case Detector::kAccordingTo:
      return "AccordingTo";
  }
  return "";
}

std::vector<std::string> DetectorSet::Names() const {
  std::vector<std::string> names;
  for (Detector d : kAllDetectors) {
    if (Contains(d)) names.emplace_back(DetectorName(d));
  }
  return names;
}

std::string DetectorSet::Label() const {
  std::string label;
  for (const std::string &n : Names()) {
    if (!label.empty()) label.push_back('+');
    label += n;
  }
  return label;
}

std::optional<DetectorSet> DetectorSet::FromNames(
    const std::vector<std::string> &names) {
  DetectorSet set;
  for (const std::string &n : names) {
    bool found = false;
    for (Detector d : kAllDetectors) {
      if (DetectorName(d) == n) {
        set.Add(d);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return set;
}

ReportingVerbLexicon::ReportingVerbLexicon(std::vector<std::string> entries) {
  std::vector<std::string> singles;
  for (std::string &e : entries) {
    std::string lower = AsciiLower(Trim(e));
    if (lower.empty()) continue;
    if (std::find(entries_.begin(), entries_.end(), lower) != entries_.end()) {
      continue;
    }
    std::vector<std::string> words = SimilarityTokens(lower);
    if (words.size() == 1) {
      singles.push_back(words[0]);
    } else if (words.size() > 1) {
      phrases_.push_back(std::move(words));
    }
    entries_.push_back(std::move(lower));
  }
  single_ = WordList(std::move(singles));
}

ReportingVerbLexicon ReportingVerbLexicon::Load(const std::string &path) {
  return ReportingVerbLexicon(ReadListFile(path));
}

bool ReportingVerbLexicon::Contains(std::string_view verb) const {
  std::string lower = AsciiLower(Trim(verb));
  return std::find(entries_.begin(), entries_.end(), lower) != entries_.end();
}

size_t ReportingVerbLexicon::MatchAt(const std::vector<Token> &tokens,
                                     size_t i) const {
  size_t best = 0;
  for (const std::vector<std::string> &phrase : phrases_) {
    if (phrase.size() <= best || i + phrase.size() > tokens.size()) continue;
    bool match = true;
    for (size_t k = 0; k < phrase.size() && match; ++k) {
      match = AsciiLower(tokens[i + k].text) == phrase[k];
    }
    if (match) best = phrase.size();
  }
  if (best == 0 && single_.Contains(AsciiLower(tokens[i].text))) best = 1;
  return best;
}

namespace {

size_t CountWordChars(std::string_view s) {
  return std::count_if(s.begin(), s.end(), [](char c) { return IsAsciiAlnum(c); });
}

bool IsWordBoundary(std::string_view text, size_t pos) {
  return pos >= text.size() || !IsAsciiAlnum(text[pos]);
}

bool IsBlank(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return IsSpace(c); });
}

size_t SkipSpaces(std::string_view text, size_t pos) {
  while (pos < text.size() && IsSpace(text[pos])) ++pos;
  return pos;
}

// Span trimmed of whitespace, then of trailing sentence punctuation and
// commas (and surrounding whitespace again).
TextSpan TrimClause(std::string_view text, TextSpan span) {
  span = TrimSpan(text, span);
  while (span.end > span.begin) {
    char c = text[span.end - 1];
    if (c == '.' || c == '!' || c == '?' || c == ',' || c == ';' || c == ':') {
      --span.end;
      span = TrimSpan(text, span);
    } else {
      break;
    }
  }
  while (span.begin < span.end && (text[span.begin] == ',' || text[span.begin] == ':')) {
    ++span.begin;
    span = TrimSpan(text, span);
  }
  return span;
}

QuoteCandidate MakeCandidate(const Sentence &sentence, Detector detector) {
  QuoteCandidate c;
  c.article_id = sentence.article_id;
  c.sentence_index = sentence.index;
  c.detectors = DetectorSet(detector);
  return c;
}

void SetSpeech(const Sentence &s, TextSpan span, bool quoted, QuoteCandidate *c) {
  c->rspeech_span = span;
  c->rspeech = std::string(span.Slice(s.text));
  c->rspeech_quoted = quoted;
}

void SetAttribution(const Sentence &s, TextSpan span, QuoteCandidate *c) {
  c->attribution_span = span;
  c->attribution = std::string(span.Slice(s.text));
}

bool ContainsSubjectWord(std::string_view text, TextSpan span,
                         const WordList &stoplist) {
  for (const Token &t : TokenizeWords(span.Slice(text))) {
    if (IsCapitalized(t.text) && !stoplist.Contains(t.text)) return true;
  }
  return false;
}

bool IsObjectTakingVerb(std::string_view verb) {
  static const WordList *verbs = new WordList(
      {"told", "tell", "tells", "telling", "informed", "inform", "informs",
       "informing", "assured", "assure", "assures", "assuring", "reminded",
       "remind", "reminds", "reminding", "notified", "notify", "notifies",
       "briefed", "brief", "briefs", "advised", "advise", "advises"});
  return verbs->Contains(verb);
}

// Lowercase words that open a descriptive phrase after a name.
bool StartsAppositive(std::string_view segment) {
  static const WordList *openers = new WordList(
      {"a", "an", "the", "former", "then", "who", "director", "president",
       "chair", "chief", "head", "dean", "professor", "senior", "spokesman",
       "spokeswoman", "spokesperson"});
  std::vector<Token> tokens = TokenizeWords(segment);
  return !tokens.empty() && openers->Contains(tokens[0].text);
}

}  // namespace

std::optional<QuoteCandidate> DetectDirectPattern(const Sentence &sentence) {
  std::string_view text = sentence.text;
  for (const QuotedRegion &r : FindQuotedRegions(text)) {
    TextSpan content = r.content();
    if (CountWordChars(content.Slice(text)) < 2) continue;
    size_t pos = r.close + 1;
    bool comma_inside = content.end > content.begin && text[content.end - 1] == ',';
    bool comma_outside = pos < text.size() && text[pos] == ',';
    if (!comma_inside && !comma_outside) continue;
    if (comma_outside) ++pos;
    pos = SkipSpaces(text, pos);
    for (std::string_view verb : {"said", "says", "say"}) {
      if (text.substr(pos, verb.size()) != verb ||
          !IsWordBoundary(text, pos + verb.size())) {
        continue;
      }
      QuoteCandidate c = MakeCandidate(sentence, Detector::kDirectPattern);
      SetSpeech(sentence, content, true, &c);
      c.rverb = std::string(verb);
      c.rverb_span = {pos, pos + verb.size()};
      size_t tail_end = text.find('"', c.rverb_span.end);
      if (tail_end == std::string_view::npos) tail_end = text.size();
      SetAttribution(sentence,
                     TrimSpan(text, {c.rverb_span.end, tail_end}), &c);
      return c;
    }
  }
  return std::nullopt;
}

std::optional<QuoteCandidate> DetectClausalComplement(
    const Sentence &sentence, const ReportingVerbLexicon &lexicon,
    const WordList &stoplist) {
  std::string_view text = sentence.text;
  std::vector<Token> tokens = TokenizeWords(text);
  std::vector<QuotedRegion> regions = FindQuotedRegions(text);

  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!IsAsciiLower(tokens[i].text.front())) continue;
    if (OverlapsQuotedRegion(regions, tokens[i].span)) continue;
    size_t len = lexicon.MatchAt(tokens, i);
    if (len == 0) continue;
    if (AsciiLower(tokens[i].text) == "according") continue;
    TextSpan verb{tokens[i].span.begin, tokens[i + len - 1].span.end};

    // The clause starts after the last quotation that closes before the verb.
    const QuotedRegion *before = nullptr;
    const QuotedRegion *after = nullptr;
    for (const QuotedRegion &r : regions) {
      if (r.close < verb.begin) before = &r;
      if (r.open > verb.end && after == nullptr) after = &r;
    }
    size_t clause_start = before ? before->close + 1 : 0;
    TextSpan window = TrimClause(text, {clause_start, verb.begin});

    QuoteCandidate c = MakeCandidate(sentence, Detector::kClausalComplement);
    c.rverb = std::string(verb.Slice(text));
    c.rverb_span = verb;

    if (!window.empty() && ContainsSubjectWord(text, window, stoplist)) {
      SetAttribution(sentence, window, &c);
    } else if (window.empty() && before != nullptr) {
      // Inverted subject: "...," said Jane Doe of X.
      size_t start = SkipSpaces(text, verb.end);
      size_t stop = start;
      while (stop < text.size() && text[stop] != ',' && text[stop] != ';' &&
             text[stop] != '"') {
        ++stop;
      }
      TextSpan subject = TrimClause(text, {start, stop});
      if (subject.empty() || !ContainsSubjectWord(text, subject, stoplist)) continue;
      std::vector<Token> first = TokenizeWords(subject.Slice(text));
      if (first.empty() || !IsCapitalized(first[0].text)) continue;
      SetAttribution(sentence, subject, &c);
    } else {
      continue;
    }

    if (before != nullptr && CountWordChars(before->content().Slice(text)) >= 2) {
      SetSpeech(sentence, before->content(), true, &c);
      return c;
    }
    if (after != nullptr && CountWordChars(after->content().Slice(text)) >= 2) {
      SetSpeech(sentence, after->content(), true, &c);
      return c;
    }
    if (c.attribution_span.begin > verb.begin) continue;  // inverted needs a quote

    // Indirect speech: the content clause after the verb.
    size_t k = i + len;
    if (IsObjectTakingVerb(AsciiLower(c.rverb)) && k < tokens.size()) {
      // "told the New York Post that ..." names the listener; skip it whole.
      if (tokens[k].text == "the" && k + 1 < tokens.size() &&
          IsCapitalized(tokens[k + 1].text)) {
        ++k;
      }
      if (IsCapitalized(tokens[k].text)) {
        while (k < tokens.size() && IsCapitalized(tokens[k].text) &&
               IsBlank(text.substr(tokens[k - 1].span.end,
                                   tokens[k].span.begin - tokens[k - 1].span.end))) {
          ++k;
        }
      } else {
        ++k;
      }
    }
    if (k < tokens.size() && AsciiLower(tokens[k].text) == "that") ++k;
    if (k >= tokens.size()) continue;
    TextSpan speech = TrimClause(text, {tokens[k].span.begin, text.size()});
    if (TokenizeWords(speech.Slice(text)).size() < 2) continue;
    SetSpeech(sentence, speech, false, &c);
    return c;
  }
  return std::nullopt;
}

std::optional<QuoteCandidate> DetectAccordingTo(const Sentence &sentence) {
  std::string_view text = sentence.text;
  std::vector<Token> tokens = TokenizeWords(text);
  std::vector<QuotedRegion> regions = FindQuotedRegions(text);
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (AsciiLower(tokens[i].text) != "according" ||
        AsciiLower(tokens[i + 1].text) != "to") {
      continue;
    }
    TextSpan phrase{tokens[i].span.begin, tokens[i + 1].span.end};
    if (OverlapsQuotedRegion(regions, phrase)) continue;

    QuoteCandidate c = MakeCandidate(sentence, Detector::kAccordingTo);
    c.rverb = "according to";
    c.rverb_span = phrase;

    size_t source_start = SkipSpaces(text, phrase.end);
    size_t source_stop = source_start;
    while (source_stop < text.size() && text[source_stop] != ',' &&
           text[source_stop] != ';' && text[source_stop] != '"') {
      ++source_stop;
    }
    TextSpan source = TrimClause(text, {source_start, source_stop});
    SetAttribution(sentence, source, &c);

    TextSpan before = TrimClause(text, {0, phrase.begin});
    if (before.empty()) {
      // "According to X, <speech>." An appositive such as "a professor at
      // Y," after X belongs to the source, not to the speech.
      if (source_stop >= text.size()) return std::nullopt;
      size_t next_comma = text.find(',', source_stop + 1);
      if (next_comma != std::string_view::npos &&
          StartsAppositive(text.substr(source_stop + 1, next_comma - source_stop - 1)) &&
          !OverlapsQuotedRegion(regions, {source_stop, next_comma}) &&
          TokenizeWords(text.substr(next_comma + 1)).size() >= 2) {
        source_stop = next_comma;
        SetAttribution(sentence, TrimClause(text, {source_start, source_stop}), &c);
      }
      TextSpan speech = TrimClause(text, {source_stop + 1, text.size()});
      if (speech.empty()) return std::nullopt;
      bool quoted = false;
      for (const QuotedRegion &r : regions) {
        if (r.with_marks() == speech || (r.open == speech.begin && r.close + 1 >= speech.end)) {
          speech = r.content();
          quoted = true;
        }
      }
      SetSpeech(sentence, speech, quoted, &c);
      return c;
    }
    bool quoted = false;
    for (const QuotedRegion &r : regions) {
      if (r.open == before.begin && r.close + 1 >= before.end) {
        before = r.content();
        quoted = true;
      }
    }
    SetSpeech(sentence, before, quoted, &c);
    return c;
  }
  return std::nullopt;
}

std::vector<QuoteCandidate> DetectAll(
    const Sentence &sentence,
    const std::vector<std::unique_ptr<QuoteDetector>> &detectors) {
  std::vector<QuoteCandidate> out;
  for (const auto &d : detectors) {
    if (std::optional<QuoteCandidate> c = d->Detect(sentence)) {
      out.push_back(std::move(*c));
    }
  }
  return out;
}

namespace {

TextSpan ProtectedSpeech(const QuoteCandidate &c) {
  if (c.rspeech_quoted && c.rspeech_span.begin > 0) {
    return {c.rspeech_span.begin - 1, c.rspeech_span.end + 1};
  }
  return c.rspeech_span;
}

size_t Distance(TextSpan a, TextSpan b) {
  if (a.Overlaps(b)) return 0;
  return a.end <= b.begin ? b.begin - a.end : a.begin - b.end;
}

bool IsOutletName(const std::string &org, const UnionOptions &options) {
  for (const std::string &name : options.outlet_names) {
    if (TokenSetSimilarity(org, name) >= kMatchThreshold) return true;
  }
  return false;
}

bool Resolve(const std::vector<PersonMention> &persons,
             const std::vector<OrgMention> &orgs, const UnionOptions &options,
             QuoteCandidate *c) {
  TextSpan speech = ProtectedSpeech(*c);
  const PersonMention *speaker = nullptr;
  for (const PersonMention &p : persons) {
    if (c->attribution_span.Contains(p.span) && !p.span.Overlaps(speech)) {
      speaker = &p;
      break;
    }
  }
  if (speaker == nullptr) return false;

  const OrgMention *inside = nullptr;
  const OrgMention *closest = nullptr;
  for (const OrgMention &o : orgs) {
    if (o.span.Overlaps(speech) || o.span.Overlaps(speaker->span)) continue;
    if (options.suppress_outlet && IsOutletName(o.text, options)) continue;
    if (inside == nullptr && c->attribution_span.Contains(o.span)) inside = &o;
    if (closest == nullptr ||
        Distance(o.span, speaker->span) < Distance(closest->span, speaker->span)) {
      closest = &o;
    }
  }
  const OrgMention *org = inside ? inside : closest;
  if (org == nullptr) return false;

  c->speaker_text = speaker->text;
  c->speaker_span = speaker->span;
  c->org_text = org->text;
  c->org_span = org->span;
  return true;
}

}  // namespace

std::vector<QuoteCandidate> UnionCandidates(
    std::vector<QuoteCandidate> candidates,
    const std::vector<PersonMention> &persons,
    const std::vector<OrgMention> &orgs, const UnionOptions &options) {
  std::vector<QuoteCandidate> resolved;
  for (QuoteCandidate &c : candidates) {
    if (c.detectors.empty()) continue;
    if (Resolve(persons, orgs, options, &c)) resolved.push_back(std::move(c));
  }
  std::sort(resolved.begin(), resolved.end(),
            [](const QuoteCandidate &a, const QuoteCandidate &b) {
              return std::make_tuple(a.rspeech_span.begin, a.rspeech_span.end,
                                     a.detectors.bits()) <
                     std::make_tuple(b.rspeech_span.begin, b.rspeech_span.end,
                                     b.detectors.bits());
            });

  std::vector<QuoteCandidate> merged;
  size_t i = 0;
  while (i < resolved.size()) {
    size_t j = i + 1;
    TextSpan group = resolved[i].rspeech_span;
    while (j < resolved.size() && resolved[j].rspeech_span.begin < group.end) {
      group.end = std::max(group.end, resolved[j].rspeech_span.end);
      ++j;
    }
    size_t winner = i;
    DetectorSet tags;
    for (size_t k = i; k < j; ++k) {
      tags.Add(resolved[k].detectors);
      if (resolved[k].detectors.bits() < resolved[winner].detectors.bits()) {
        winner = k;
      }
    }
    QuoteCandidate out = std::move(resolved[winner]);
    out.detectors = tags;
    merged.push_back(std::move(out));
    i = j;
  }
  return merged;
}

}  // namespace expertaudit
