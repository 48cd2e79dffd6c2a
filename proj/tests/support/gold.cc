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

#include "gold.h"

#include "expertaudit/text.h"
#include "json.hpp"

namespace expertaudit::testing {
namespace {

std::optional<std::string> OptionalString(const nlohmann::json &j, const char *key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<std::string>();
}

GoldMention ParseMention(const nlohmann::json &j) {
  GoldMention m;
  m.article_id = j.at("article_id").get<std::string>();
  m.sentence_index = j.at("sentence_index").get<int>();
  m.speaker = j.at("speaker").get<std::string>();
  m.gender = j.at("gender").get<std::string>();
  m.org = j.at("org").get<std::string>();
  m.link = OptionalString(j, "link");
  m.link_type = OptionalString(j, "link_type");
  m.detectors = j.at("detectors").get<std::vector<std::string>>();
  return m;
}

}  // namespace

Gold LoadGold(const std::string &path) {
  nlohmann::json j = nlohmann::json::parse(ReadFile(path));
  Gold gold;
  gold.articles = j.at("articles").get<int>();
  for (const auto &m : j.at("mentions")) gold.mentions.push_back(ParseMention(m));
  for (const auto &m : j.at("outlet_org_mentions")) {
    gold.outlet_org_mentions.push_back(ParseMention(m));
  }
  for (const auto &d : j.at("distractors")) {
    gold.distractors.push_back(
        {d.at("article_id").get<std::string>(), d.at("sentence_index").get<int>()});
  }
  gold.gender = j.at("gender").get<std::map<std::string, int64_t>>();
  gold.provenance = j.at("provenance").get<std::map<std::string, int64_t>>();
  return gold;
}

GoldMention ToGold(const ExpertMention &m) {
  GoldMention g;
  g.article_id = m.article_id;
  g.sentence_index = m.sentence_index;
  g.speaker = m.speaker;
  g.gender = std::string(GenderName(m.gender.merged()));
  g.org = m.org;
  if (m.org_link) {
    g.link = m.org_link->name;
    g.link_type = std::string(OrgTypeName(m.org_link->type));
  }
  g.detectors = m.detectors.Names();
  return g;
}

bool SameMention(const GoldMention &a, const GoldMention &b) {
  return a.article_id == b.article_id && a.sentence_index == b.sentence_index &&
         a.speaker == b.speaker && a.gender == b.gender && a.org == b.org &&
         a.link == b.link && a.link_type == b.link_type && a.detectors == b.detectors;
}

std::string Describe(const GoldMention &m) {
  std::string d = m.article_id + "#" + std::to_string(m.sentence_index) + " " + m.speaker +
                  " (" + m.gender + ") / " + m.org + " -> " + m.link.value_or("-") + " [";
  for (size_t i = 0; i < m.detectors.size(); ++i) d += (i ? "+" : "") + m.detectors[i];
  return d + "]";
}

GoldComparison CompareToGold(const std::vector<GoldMention> &gold,
                             const std::vector<ExpertMention> &mentions) {
  GoldComparison cmp;
  std::vector<GoldMention> produced;
  for (const ExpertMention &m : mentions) produced.push_back(ToGold(m));
  std::vector<bool> used(produced.size(), false);
  for (const GoldMention &g : gold) {
    bool found = false;
    for (size_t i = 0; i < produced.size() && !found; ++i) {
      if (!used[i] && SameMention(g, produced[i])) used[i] = found = true;
    }
    if (found) {
      ++cmp.recalled;
    } else {
      cmp.missing.push_back(Describe(g));
    }
  }
  for (size_t i = 0; i < produced.size(); ++i) {
    if (!used[i]) cmp.unexpected.push_back(Describe(produced[i]));
  }
  return cmp;
}

}  // namespace expertaudit::testing
