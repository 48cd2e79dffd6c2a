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

#include "expertaudit/pipeline.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace expertaudit {
namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> KnownOrgNames(const PipelineResources &res) {
  std::vector<std::string> names;
  for (const OrgRecord &r : res.gazetteer.records()) names.push_back(r.name);
  for (const std::string &n : res.known_orgs) names.push_back(n);
  for (const std::string &n : res.sources.AllSelfOrgNames()) names.push_back(n);
  return names;
}

json LinkToJson(const std::optional<LinkedOrg> &link) {
  if (!link) return nullptr;
  json j;
  j["name"] = link->name;
  j["type"] = OrgTypeName(link->type);
  j["score"] = link->score;
  j["world_rank"] = link->world_rank ? json(*link->world_rank) : json(nullptr);
  j["public_health_rank"] =
      link->public_health_rank ? json(*link->public_health_rank) : json(nullptr);
  return j;
}

std::optional<int> OptionalInt(const json &j, const char *key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

}  // namespace

int Utf8Length(std::string_view text) {
  int n = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string MentionToJsonLine(const ExpertMention &m) {
  json j;
  j["article_id"] = m.article_id;
  j["sentence_index"] = m.sentence_index;
  j["source"] = m.source;
  j["speaker"] = m.speaker;
  j["gender_raw"] = RawGenderName(m.gender.raw());
  j["gender"] = GenderName(m.gender.merged());
  j["org"] = m.org;
  j["org_link"] = LinkToJson(m.org_link);
  j["detectors"] = m.detectors.Names();
  j["rverb"] = m.rverb;
  j["rspeech"] = m.rspeech;
  j["sentence_char_length"] = m.sentence_char_length;
  j["sentence_text"] = m.sentence_text;
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

ExpertMention MentionFromJsonLine(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument(std::string("mention: ") + e.what());
  }
  try {
    ExpertMention m;
    m.article_id = j.at("article_id").get<std::string>();
    m.sentence_index = j.at("sentence_index").get<int>();
    m.source = j.at("source").get<std::string>();
    m.speaker = j.at("speaker").get<std::string>();
    auto raw = ParseRawGender(j.at("gender_raw").get<std::string>());
    if (!raw) throw std::invalid_argument("mention: bad gender_raw");
    m.gender = GenderLabel(*raw);
    m.org = j.at("org").get<std::string>();
    const json &link = j.at("org_link");
    if (!link.is_null()) {
      LinkedOrg lo;
      lo.name = link.at("name").get<std::string>();
      auto type = ParseOrgType(link.at("type").get<std::string>());
      if (!type) throw std::invalid_argument("mention: bad org type");
      lo.type = *type;
      lo.score = link.at("score").get<int>();
      lo.world_rank = OptionalInt(link, "world_rank");
      lo.public_health_rank = OptionalInt(link, "public_health_rank");
      m.org_link = std::move(lo);
    }
    auto detectors =
        DetectorSet::FromNames(j.at("detectors").get<std::vector<std::string>>());
    if (!detectors || detectors->empty()) {
      throw std::invalid_argument("mention: bad detectors");
    }
    m.detectors = *detectors;
    m.rverb = j.value("rverb", "");
    m.rspeech = j.value("rspeech", "");
    m.sentence_char_length = j.at("sentence_char_length").get<int>();
    m.sentence_text = j.value("sentence_text", "");
    if (m.sentence_char_length <= 0) {
      throw std::invalid_argument("mention: sentence_char_length must be > 0");
    }
    return m;
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("mention: ") + e.what());
  }
}

void WriteMentionsJsonl(const std::vector<ExpertMention> &mentions,
                        const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const ExpertMention &m : mentions) out << MentionToJsonLine(m) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<ExpertMention> ReadMentionsJsonl(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<ExpertMention> mentions;
  std::string line;
  int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (Trim(line).empty()) continue;
    try {
      mentions.push_back(MentionFromJsonLine(line));
    } catch (const std::invalid_argument &e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  return mentions;
}

std::unique_ptr<PipelineResources> PipelineResources::Load(
    const std::string &lexicon_dir, const std::string &gazetteer_dir,
    const std::string &sources_path, WarningSink warn) {
  namespace fs = std::filesystem;
  auto res = std::make_unique<PipelineResources>();
  res->entities = EntityResources::LoadDirectory(lexicon_dir);
  res->lexicon =
      ReportingVerbLexicon::Load((fs::path(lexicon_dir) / "reporting_verbs.txt").string());
  fs::path known = fs::path(lexicon_dir) / "known_orgs.txt";
  if (fs::exists(known)) res->known_orgs = ReadListFile(known.string());
  res->gazetteer = Gazetteer::LoadDirectory(gazetteer_dir, warn);
  res->sources = SourceConfig::Load(sources_path);
  return res;
}

Extractor::Extractor(const PipelineResources &resources, ExtractOptions options)
    : res_(&resources),
      options_(options),
      persons_(resources.entities),
      orgs_(KnownOrgNames(resources), resources.entities) {
  detectors_.push_back(std::make_unique<DirectPatternDetector>());
  detectors_.push_back(std::make_unique<ClausalComplementDetector>(
      resources.lexicon, resources.entities.stoplist));
  detectors_.push_back(std::make_unique<AccordingToDetector>());
}

std::vector<ExpertMention> Extractor::ExtractArticle(const Article &article,
                                                     ExtractStats *stats) const {
  ExtractStats local;
  std::vector<ExpertMention> out;
  local.articles = 1;
  const Outlet *outlet = res_->sources.Find(article.source);
  if (outlet == nullptr) {
    local.articles_unknown_source = 1;
  } else {
    UnionOptions union_options;
    union_options.outlet_names = outlet->self_org_names;
    union_options.suppress_outlet = options_.suppress_outlet;
    for (const Sentence &sentence : SegmentArticle(article)) {
      ++local.sentences;
      std::vector<QuoteCandidate> candidates = DetectAll(sentence, detectors_);
      if (candidates.empty()) continue;
      local.candidates += static_cast<int64_t>(candidates.size());
      std::vector<PersonMention> persons = persons_.Find(sentence.text);
      std::vector<OrgMention> orgs = orgs_.Find(sentence.text);
      for (QuoteCandidate &c :
           UnionCandidates(std::move(candidates), persons, orgs, union_options)) {
        ExpertMention m;
        m.article_id = article.id;
        m.sentence_index = sentence.index;
        m.source = article.source;
        m.speaker = *c.speaker_text;
        m.gender = ClassifyGender(m.speaker, res_->entities);
        m.org = *c.org_text;
        if (auto link = res_->gazetteer.Link(m.org)) {
          const OrgRecord &r = *link->record;
          m.org_link = LinkedOrg{r.name, r.type, link->score, r.world_rank,
                                 r.public_health_rank};
        }
        m.detectors = c.detectors;
        m.sentence_char_length = Utf8Length(sentence.text);
        m.sentence_text = sentence.text;
        m.rspeech = c.rspeech;
        m.rverb = c.rverb;
        out.push_back(std::move(m));
      }
    }
  }
  local.mentions = static_cast<int64_t>(out.size());
  if (stats != nullptr) {
    stats->articles += local.articles;
    stats->articles_unknown_source += local.articles_unknown_source;
    stats->sentences += local.sentences;
    stats->candidates += local.candidates;
    stats->mentions += local.mentions;
  }
  return out;
}

std::vector<ExpertMention> Extractor::ExtractAll(const std::vector<Article> &articles,
                                                 ExtractStats *stats,
                                                 WarningSink warn) const {
  std::vector<size_t> order(articles.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return articles[a].id < articles[b].id;
  });

  std::vector<std::vector<ExpertMention>> per_article(articles.size());
  std::vector<ExtractStats> per_stats(articles.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t k = next++; k < order.size(); k = next++) {
      per_article[k] = ExtractArticle(articles[order[k]], &per_stats[k]);
    }
  };
  int threads = std::max(1, options_.threads);
  if (threads == 1 || articles.size() < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread &t : pool) t.join();
  }

  std::vector<ExpertMention> out;
  std::vector<std::string> unknown_sources;
  for (size_t k = 0; k < order.size(); ++k) {
    const ExtractStats &s = per_stats[k];
    if (s.articles_unknown_source > 0) {
      unknown_sources.push_back(articles[order[k]].source);
    }
    if (stats != nullptr) {
      stats->articles += s.articles;
      stats->articles_unknown_source += s.articles_unknown_source;
      stats->sentences += s.sentences;
      stats->candidates += s.candidates;
      stats->mentions += s.mentions;
    }
    for (ExpertMention &m : per_article[k]) out.push_back(std::move(m));
  }
  if (!unknown_sources.empty() && warn) {
    std::sort(unknown_sources.begin(), unknown_sources.end());
    unknown_sources.erase(std::unique(unknown_sources.begin(), unknown_sources.end()),
                          unknown_sources.end());
    std::string list;
    for (const std::string &s : unknown_sources) list += (list.empty() ? "" : ", ") + s;
    warn("skipped articles from outlets missing in the source config: " + list);
  }
  return out;
}

}  // namespace expertaudit
