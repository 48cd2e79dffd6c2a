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

#include "synthetic.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "expertaudit/orglink.h"
#include "expertaudit/text.h"
#include "json.hpp"

namespace expertaudit::testing {
namespace {

const char *const kSurnames[] = {
    "Abernathy", "Baptiste", "Caldwell", "Delacroix", "Eastwood", "Fairbanks",
    "Gallagher", "Hargrove", "Iverson",   "Jablonski", "Kowalczyk", "Lindqvist",
    "Macintyre", "Nakashima", "Okonkwo",  "Pemberton", "Quintero",  "Rasmussen",
    "Sandoval",  "Thornbury", "Umberger", "Valentine", "Whitfield", "Yamamoto",
    "Zimmerman", "Ashcroft",  "Brennan",  "Castellano", "Dunmore",  "Ellsworth"};

const char *const kSpeech[] = {
    "masks reduce transmission in crowded rooms",
    "the vaccines are highly effective",
    "hospitals are short of nurses this winter",
    "testing capacity is still too low",
    "schools can reopen with precautions",
    "the new variant is more transmissible",
    "booster doses restore strong protection",
    "ventilation matters more than surface cleaning"};

const char *const kFiller[] = {"Case counts rose in several states.",
                               "The outbreak is far from over.",
                               "Hospital admissions fell over the summer."};

// Fisher-Yates with a fixed engine; std::shuffle is not portable across
// standard libraries.
template <typename T>
void Shuffle(std::vector<T> &v, std::mt19937_64 &rng) {
  for (size_t i = v.size(); i > 1; --i) {
    uint64_t bound = i;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    std::swap(v[i - 1], v[r % bound]);
  }
}

struct Names {
  std::vector<std::string> male;
  std::vector<std::string> female;
};

Names LoadFirstNames(const std::string &lexicons) {
  WordList stop = WordList::Load(lexicons + "/stoplist.txt");
  WordList honorifics = WordList::Load(lexicons + "/honorifics.txt");
  WordList cues = WordList::Load(lexicons + "/org_cues.txt");
  Names names;
  std::ifstream in(lexicons + "/names_gender.tsv");
  if (!in) throw std::runtime_error("cannot read names_gender.tsv");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::string name = line.substr(0, tab);
    std::string label = line.substr(tab + 1);
    if (stop.Contains(name) || honorifics.Contains(name) || cues.Contains(name)) continue;
    if (label == "male") names.male.push_back(name);
    if (label == "female") names.female.push_back(name);
  }
  if (names.male.empty() || names.female.empty()) {
    throw std::runtime_error("names dictionary lacks male or female entries");
  }
  return names;
}

std::vector<std::string> LoadRankedUniversities(const std::string &gazetteers, int n) {
  std::vector<std::string> by_rank(n);
  std::ifstream in(gazetteers + "/universities.csv");
  if (!in) throw std::runtime_error("cannot read universities.csv");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = SplitCsvLine(line);
    if (fields.size() < 2 || fields[0] == "rank") continue;
    int rank = std::stoi(fields[0]);
    if (rank >= 1 && rank <= n) by_rank[rank - 1] = fields[1];
  }
  for (int r = 0; r < n; ++r) {
    if (by_rank[r].empty()) throw std::runtime_error("gazetteer lacks rank " + std::to_string(r + 1));
  }
  return by_rank;
}

std::string Capitalize(std::string s) {
  if (!s.empty() && IsAsciiLower(s[0])) s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

double PairwiseGini(const std::vector<double> &x) {
  long double sum = 0, diffs = 0;
  for (double v : x) sum += v;
  for (double a : x) {
    for (double b : x) diffs += std::fabs(static_cast<long double>(a) - b);
  }
  long double n = x.size();
  return static_cast<double>(diffs / (2.0L * n * n * (sum / n)));
}

}  // namespace

std::vector<double> ZipfShares(int n, double s) {
  std::vector<double> w(n);
  double total = 0;
  for (int r = 1; r <= n; ++r) total += w[r - 1] = 1.0 / std::pow(r, s);
  for (double &x : w) x /= total;
  return w;
}

std::vector<int64_t> Apportion(const std::vector<double> &shares, int64_t total) {
  std::vector<int64_t> out(shares.size());
  std::vector<std::pair<double, size_t>> remainders;
  int64_t assigned = 0;
  for (size_t i = 0; i < shares.size(); ++i) {
    double exact = shares[i] * static_cast<double>(total);
    out[i] = static_cast<int64_t>(std::floor(exact));
    assigned += out[i];
    remainders.emplace_back(exact - std::floor(exact), i);
  }
  // Largest remainder first; lower index breaks ties.
  std::sort(remainders.begin(), remainders.end(), [](const auto &a, const auto &b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (size_t k = 0; assigned < total; ++k, ++assigned) ++out[remainders[k].second];
  return out;
}

SyntheticCorpus GenerateSynthetic(const SyntheticConfig &config, const std::string &data_dir) {
  if (config.articles < 1 || config.mentions_per_article < 1 || config.institutions < 2) {
    throw std::invalid_argument("synthetic corpus needs articles, mentions and institutions");
  }
  Names names = LoadFirstNames(data_dir + "/lexicons");
  std::vector<std::string> universities =
      LoadRankedUniversities(data_dir + "/gazetteers", config.institutions);
  SourceConfig sources = SourceConfig::Load(data_dir + "/sources.json");
  std::vector<std::string> outlets;
  for (const Outlet *o : sources.Ordered()) outlets.push_back(o->key);

  SyntheticCorpus corpus;
  const int64_t total = static_cast<int64_t>(config.articles) * config.mentions_per_article;
  std::vector<int64_t> gender_quota = Apportion(
      {static_cast<double>(config.men_weight) / (config.men_weight + config.women_weight),
       static_cast<double>(config.women_weight) / (config.men_weight + config.women_weight)},
      total);
  corpus.men = gender_quota[0];
  corpus.women = gender_quota[1];
  corpus.zipf_shares = ZipfShares(config.institutions, config.zipf_s);
  corpus.mentions_by_rank = Apportion(corpus.zipf_shares, total);
  corpus.analytic_gini = PairwiseGini(corpus.zipf_shares);

  std::mt19937_64 rng(config.seed);
  std::vector<bool> is_woman(total, false);
  std::fill(is_woman.begin() + corpus.men, is_woman.end(), true);
  std::vector<int> rank_slots;
  for (int r = 0; r < config.institutions; ++r) {
    rank_slots.insert(rank_slots.end(), corpus.mentions_by_rank[r], r);
  }
  Shuffle(is_woman, rng);
  Shuffle(rank_slots, rng);

  const auto base = std::chrono::sys_days{std::chrono::year{2020} / 3 / 1};
  int64_t slot = 0;
  for (int a = 0; a < config.articles; ++a) {
    Article article;
    char id[32];
    std::snprintf(id, sizeof id, "syn%05d", a + 1);
    article.id = id;
    article.source = outlets[a % outlets.size()];
    article.published_at = Timestamp(base) + std::chrono::hours(a);
    article.title = "Synthetic article " + std::to_string(a + 1);
    std::string body;
    for (int m = 0; m < config.mentions_per_article; ++m, ++slot) {
      const auto &pool = is_woman[slot] ? names.female : names.male;
      std::string person = pool[rng() % pool.size()] + " " +
                           kSurnames[rng() % std::size(kSurnames)];
      const std::string &uni = universities[rank_slots[slot]];
      std::string speech = kSpeech[rng() % std::size(kSpeech)];
      int form = static_cast<int>(rng() % 3);
      // A comma inside the university name would end an "According to" source.
      if (form == 2 && uni.find(',') != std::string::npos) form = 0;
      if (!body.empty()) body += ' ';
      switch (form) {
        case 0:
          body += "\"" + Capitalize(speech) + ",\" said " + person + " of " + uni + ".";
          break;
        case 1:
          body += person + ", a researcher at " + uni + ", said that " + speech + ".";
          break;
        default:
          body += "According to " + person + " of " + uni + ", " + speech + ".";
      }
      body += std::string(" ") + kFiller[rng() % std::size(kFiller)];
    }
    article.body = std::move(body);
    corpus.articles.push_back(std::move(article));
  }
  return corpus;
}

void WriteArticlesJsonl(const std::vector<Article> &articles, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const Article &a : articles) {
    nlohmann::ordered_json j;
    j["id"] = a.id;
    j["source"] = a.source;
    j["published_at"] = FormatUtcTimestamp(a.published_at);
    j["title"] = a.title;
    j["body"] = a.body;
    out << j.dump() << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace expertaudit::testing
