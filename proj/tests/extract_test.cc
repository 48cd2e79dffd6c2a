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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "expertaudit/pipeline.h"
#include "support/gold.h"

#ifndef EXPERTAUDIT_DATA_DIR
#define EXPERTAUDIT_DATA_DIR "data"
#endif

namespace expertaudit {
namespace {

const std::string kData = EXPERTAUDIT_DATA_DIR;

const PipelineResources &Res() {
  static const PipelineResources *r =
      PipelineResources::Load(kData + "/lexicons", kData + "/gazetteers",
                              kData + "/sources.json", [](const std::string &) {})
          .release();
  return *r;
}

Sentence Make(std::string text) {
  Sentence s;
  s.article_id = "t";
  s.span = {0, text.size()};
  s.text = std::move(text);
  return s;
}

std::optional<QuoteCandidate> Clausal(const std::string &text) {
  return DetectClausalComplement(Make(text), Res().lexicon, Res().entities.stoplist);
}

// Runs detection and union with the shipped resources, as the extractor does.
std::vector<QuoteCandidate> Survivors(const std::string &text,
                                      const std::vector<Detector> &enabled,
                                      const std::string &outlet = "nyt",
                                      bool suppress = true) {
  static const PersonFinder *persons = new PersonFinder(Res().entities);
  static const OrgFinder *orgs = [] {
    std::vector<std::string> names;
    for (const OrgRecord &r : Res().gazetteer.records()) names.push_back(r.name);
    for (const std::string &n : Res().known_orgs) names.push_back(n);
    for (const std::string &n : Res().sources.AllSelfOrgNames()) names.push_back(n);
    return new OrgFinder(names, Res().entities);
  }();
  std::vector<std::unique_ptr<QuoteDetector>> detectors;
  for (Detector d : enabled) {
    switch (d) {
      case Detector::kDirectPattern:
        detectors.push_back(std::make_unique<DirectPatternDetector>());
        break;
      case Detector::kClausalComplement:
        detectors.push_back(std::make_unique<ClausalComplementDetector>(
            Res().lexicon, Res().entities.stoplist));
        break;
      case Detector::kAccordingTo:
        detectors.push_back(std::make_unique<AccordingToDetector>());
        break;
    }
  }
  Sentence s = Make(text);
  UnionOptions options;
  options.outlet_names = Res().sources.Find(outlet)->self_org_names;
  options.suppress_outlet = suppress;
  return UnionCandidates(DetectAll(s, detectors), persons->Find(s.text), orgs->Find(s.text),
                         options);
}

const std::vector<Detector> kAll(std::begin(kAllDetectors), std::end(kAllDetectors));

// DirectPattern

TEST(DirectPatternTest, SaidWithTail) {
  std::string text =
      "\"We must act now,\" said Anthony Fauci of the National Institutes of Health.";
  auto c = DetectDirectPattern(Make(text));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->rverb, "said");
  EXPECT_EQ(c->rspeech, "We must act now,");
  EXPECT_TRUE(c->rspeech_quoted);
  EXPECT_EQ(c->attribution, "Anthony Fauci of the National Institutes of Health.");
  EXPECT_EQ(c->detectors, DetectorSet(Detector::kDirectPattern));
}

TEST(DirectPatternTest, Says) {
  auto c = DetectDirectPattern(Make("\"Numbers are rising,\" says Deborah Birx."));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->rverb, "says");
}

TEST(DirectPatternTest, NoQuoteNoMatch) {
  EXPECT_FALSE(DetectDirectPattern(Make("He said nothing happened.")));
}

// ClausalComplement

TEST(ClausalComplementTest, SubjectBeforeVerb) {
  auto c = Clausal("Dr. Robert Redfield of the CDC told reporters the agency would expand testing.");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->rverb, "told");
  EXPECT_EQ(c->attribution, "Dr. Robert Redfield of the CDC");
  EXPECT_EQ(c->rspeech, "the agency would expand testing");
}

const char kVargas[] =
    "\"The government took a very important step, but they waited too long for this "
    "decision,\" Dr. Jose Luis Vargas Segura, a pulmonologist, told Fox News.";

TEST(ClausalComplementTest, InvertedSubjectAfterQuote) {
  auto c = Clausal(kVargas);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->rverb, "told");
  EXPECT_TRUE(c->rspeech_quoted);
}

TEST(ClausalComplementTest, OutletAsOrgIsSuppressedByDefault) {
  EXPECT_TRUE(Survivors(kVargas, kAll, "fox").empty());
  std::vector<QuoteCandidate> kept = Survivors(kVargas, kAll, "fox", false);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].org_text, "Fox News");
  EXPECT_EQ(kept[0].speaker_text, "Jose Luis Vargas Segura");
}

TEST(ClausalComplementTest, NoLexiconVerb) { EXPECT_FALSE(Clausal("The virus spread quickly overnight.")); }

// AccordingTo

TEST(AccordingToTest, TrailingAttribution) {
  auto c = DetectAccordingTo(
      Make("Cases doubled last week, according to the Centers for Disease Control and Prevention."));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->rverb, "according to");
  EXPECT_EQ(c->rspeech, "Cases doubled last week");
  EXPECT_EQ(c->attribution, "the Centers for Disease Control and Prevention");
}

TEST(AccordingToTest, LeadingAttribution) {
  std::string text = "According to Dr. Smith of Yale University, masks reduce transmission.";
  auto c = DetectAccordingTo(Make(text));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->rspeech, "masks reduce transmission");
  std::vector<QuoteCandidate> s = Survivors(text, kAll);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].org_text, "Yale University");
}

TEST(AccordingToTest, EmittedThenDroppedWithoutEntities) {
  std::string text = "Everything went according to plan.";
  EXPECT_TRUE(DetectAccordingTo(Make(text)));
  EXPECT_TRUE(Survivors(text, kAll).empty());
}

// Union

TEST(UnionTest, OverlappingDetectionsMerge) {
  std::string text =
      "\"We must act now,\" said Anthony Fauci of the National Institutes of Health.";
  std::vector<QuoteCandidate> s = Survivors(text, kAll);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(s[0].detectors.Contains(Detector::kDirectPattern));
  EXPECT_TRUE(s[0].detectors.Contains(Detector::kClausalComplement));
  EXPECT_EQ(s[0].speaker_text, "Anthony Fauci");
  EXPECT_EQ(s[0].org_text, "National Institutes of Health");
}

TEST(UnionTest, MissingPersonOrOrgIsDiscarded) {
  // Person, no organization.
  EXPECT_TRUE(Survivors("\"Numbers are rising,\" says Deborah Birx.", kAll).empty());
  // Organization, no person.
  EXPECT_TRUE(Survivors("Cases doubled last week, according to the Centers for Disease "
                        "Control and Prevention.",
                        kAll)
                  .empty());
}

TEST(UnionTest, SurvivorsCarryPersonAndOrgOutsideQuotedSpeech) {
  for (const char *text :
       {"\"We must act now,\" said Anthony Fauci of the National Institutes of Health.",
        "Dr. Robert Redfield of the CDC told reporters the agency would expand testing.",
        "According to Dr. Smith of Yale University, masks reduce transmission."}) {
    for (const QuoteCandidate &c : Survivors(text, kAll)) {
      ASSERT_TRUE(c.speaker_text && c.speaker_span) << text;
      ASSERT_TRUE(c.org_text && c.org_span) << text;
      EXPECT_FALSE(c.detectors.empty());
      if (c.rspeech_quoted) {
        EXPECT_TRUE(c.speaker_span->end <= c.rspeech_span.begin ||
                    c.rspeech_span.end <= c.speaker_span->begin)
            << text;
      }
    }
  }
}

TEST(DetectorSetTest, LabelsAndNames) {
  DetectorSet s;
  EXPECT_TRUE(s.empty());
  s.Add(Detector::kClausalComplement);
  s.Add(Detector::kDirectPattern);
  EXPECT_EQ(s.Label(), "DirectPattern+ClausalComplement");
  EXPECT_EQ(DetectorSet::FromNames(s.Names()), s);
  EXPECT_FALSE(DetectorSet::FromNames({"Parser"}));
}

// Properties over the fixture sentences, which mix every detector.

std::vector<Sentence> FixtureSentences() {
  std::vector<Sentence> out;
  for (const Article &a : ReadArticles(kData + "/fixture/articles.jsonl")) {
    for (Sentence &s : SegmentArticle(a)) out.push_back(std::move(s));
  }
  return out;
}

TEST(UnionPropertyTest, AddingDetectorsNeverLosesSentences) {
  std::vector<Sentence> sentences = FixtureSentences();
  ASSERT_FALSE(sentences.empty());
  // Every subset of detectors, by bit mask.
  std::map<int, std::set<size_t>> hits;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<Detector> enabled;
    for (int b = 0; b < 3; ++b) {
      if (mask & (1 << b)) enabled.push_back(kAllDetectors[b]);
    }
    for (size_t i = 0; i < sentences.size(); ++i) {
      if (!Survivors(sentences[i].text, enabled, "nyt").empty()) hits[mask].insert(i);
    }
  }
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      if ((a & b) != a) continue;  // a is a subset of b
      for (size_t i : hits[a]) EXPECT_TRUE(hits[b].count(i)) << a << " " << b << " " << i;
    }
  }
}

TEST(ExtractorTest, DeterministicAcrossThreadCounts) {
  std::vector<Article> articles = ReadArticles(kData + "/fixture/articles.jsonl");
  std::vector<std::string> reference;
  for (int threads : {1, 2, 4, 8}) {
    ExtractOptions options;
    options.threads = threads;
    std::vector<std::string> lines;
    for (const ExpertMention &m :
         Extractor(Res(), options).ExtractAll(articles, nullptr, [](const std::string &) {})) {
      lines.push_back(MentionToJsonLine(m));
    }
    if (reference.empty()) reference = lines;
    EXPECT_EQ(lines, reference) << threads;
  }
}

TEST(ExtractorTest, UnknownSourceYieldsNothing) {
  Article a;
  a.id = "u";
  a.source = "bbc";
  a.body = "\"We must act now,\" said Anthony Fauci of the National Institutes of Health.";
  ExtractStats stats;
  EXPECT_TRUE(Extractor(Res()).ExtractArticle(a, &stats).empty());
  EXPECT_EQ(stats.articles_unknown_source, 1);
}

TEST(MentionJsonTest, RoundTrip) {
  std::vector<Article> articles = ReadArticles(kData + "/fixture/articles.jsonl");
  for (const ExpertMention &m :
       Extractor(Res()).ExtractAll(articles, nullptr, [](const std::string &) {})) {
    std::string line = MentionToJsonLine(m);
    EXPECT_EQ(MentionToJsonLine(MentionFromJsonLine(line)), line);
  }
  EXPECT_THROW(MentionFromJsonLine("{}"), std::invalid_argument);
  EXPECT_THROW(MentionFromJsonLine("nope"), std::invalid_argument);
}

TEST(Utf8LengthTest, CountsCodePoints) {
  EXPECT_EQ(Utf8Length(""), 0);
  EXPECT_EQ(Utf8Length("abc"), 3);
  EXPECT_EQ(Utf8Length("Uch\xC3\xA9"), 4);
  EXPECT_EQ(Utf8Length("\xE2\x80\x9Chi\xE2\x80\x9D"), 4);
}

// Lexicon

TEST(ReportingVerbLexiconTest, ShippedList) {
  const ReportingVerbLexicon &lex = Res().lexicon;
  EXPECT_GE(lex.size(), 262u);
  for (const char *v : {"said", "say", "says", "told", "tell", "explains", "report", "reported",
                        "acclaim"}) {
    EXPECT_TRUE(lex.Contains(v)) << v;
  }
  EXPECT_TRUE(lex.Contains("SAID"));
  EXPECT_FALSE(lex.Contains("spread"));
}

TEST(ReportingVerbLexiconTest, LongestPhraseMatch) {
  ReportingVerbLexicon lex({"point", "point out", "said"});
  std::vector<Token> tokens = TokenizeWords("She pointed, then Point out the flaw");
  EXPECT_EQ(lex.MatchAt(tokens, 0), 0u);
  EXPECT_EQ(lex.MatchAt(tokens, 3), 2u);
}

// Fixture

TEST(FixtureTest, MatchesGold) {
  testing::Gold gold = testing::LoadGold(kData + "/fixture/gold.json");
  std::vector<Article> articles = ReadArticles(kData + "/fixture/articles.jsonl");
  ASSERT_EQ(static_cast<int>(articles.size()), gold.articles);
  std::vector<ExpertMention> mentions =
      Extractor(Res()).ExtractAll(articles, nullptr, [](const std::string &) {});
  testing::GoldComparison cmp = testing::CompareToGold(gold.mentions, mentions);
  EXPECT_EQ(cmp.recalled, gold.mentions.size());
  for (const std::string &m : cmp.missing) ADD_FAILURE() << "missing " << m;
  for (const std::string &m : cmp.unexpected) ADD_FAILURE() << "unexpected " << m;

  std::map<std::string, int64_t> genders, provenance;
  for (const ExpertMention &m : mentions) {
    ++genders[std::string(GenderName(m.gender.merged()))];
    ++provenance[m.detectors.Label()];
  }
  EXPECT_EQ(genders, gold.gender);
  EXPECT_EQ(provenance, gold.provenance);
}

TEST(FixtureTest, DistractorsYieldNoCandidates) {
  testing::Gold gold = testing::LoadGold(kData + "/fixture/gold.json");
  std::map<std::string, std::vector<Sentence>> by_article;
  for (const Article &a : ReadArticles(kData + "/fixture/articles.jsonl")) {
    by_article[a.id] = SegmentArticle(a);
  }
  ASSERT_EQ(gold.distractors.size(), 10u);
  std::vector<std::unique_ptr<QuoteDetector>> detectors;
  detectors.push_back(std::make_unique<DirectPatternDetector>());
  detectors.push_back(
      std::make_unique<ClausalComplementDetector>(Res().lexicon, Res().entities.stoplist));
  detectors.push_back(std::make_unique<AccordingToDetector>());
  for (const testing::GoldSentence &d : gold.distractors) {
    const std::vector<Sentence> &s = by_article.at(d.article_id);
    ASSERT_LT(static_cast<size_t>(d.sentence_index), s.size());
    EXPECT_TRUE(DetectAll(s[d.sentence_index], detectors).empty())
        << d.article_id << "#" << d.sentence_index << ": " << s[d.sentence_index].text;
  }
}

TEST(FixtureTest, SuppressionOnlyRemovesOutletOrgs) {
  testing::Gold gold = testing::LoadGold(kData + "/fixture/gold.json");
  std::vector<Article> articles = ReadArticles(kData + "/fixture/articles.jsonl");
  ExtractOptions raw;
  raw.suppress_outlet = false;
  std::vector<ExpertMention> mentions =
      Extractor(Res(), raw).ExtractAll(articles, nullptr, [](const std::string &) {});
  std::vector<testing::GoldMention> expected = gold.mentions;
  expected.insert(expected.end(), gold.outlet_org_mentions.begin(),
                  gold.outlet_org_mentions.end());
  testing::GoldComparison cmp = testing::CompareToGold(expected, mentions);
  EXPECT_EQ(cmp.recalled, expected.size());
  EXPECT_TRUE(cmp.missing.empty());
  EXPECT_TRUE(cmp.unexpected.empty());
}

}  // namespace
}  // namespace expertaudit
