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

#include "expertaudit/report.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace expertaudit {
namespace {

using json = nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Bootstrap stream ids, one per estimate family.
constexpr uint64_t kStreamRatio = 1;
constexpr uint64_t kStreamOrgType = 16;
constexpr uint64_t kStreamOutletRatio = 1024;
constexpr uint64_t kStreamOutletShare = 2048;

std::optional<double> Share(int64_t part, int64_t whole) {
  if (whole <= 0) return std::nullopt;
  return static_cast<double>(part) / static_cast<double>(whole);
}

constexpr double kCodeMan = 0;
constexpr double kCodeWoman = 1;
constexpr double kCodeUnknown = 2;

double GenderCode(GenderLabel g) {
  switch (g.merged()) {
    case Gender::kMan:
      return kCodeMan;
    case Gender::kWoman:
      return kCodeWoman;
    default:
      return kCodeUnknown;
  }
}

stats::Statistic Proportion(double code) {
  return [code](std::span<const double> xs) {
    size_t hits = std::count(xs.begin(), xs.end(), code);
    return static_cast<double>(hits) / static_cast<double>(xs.size());
  };
}

// women / men over a sample of man/woman codes; NaN without men.
double RatioStatistic(std::span<const double> xs) {
  size_t women = std::count(xs.begin(), xs.end(), kCodeWoman);
  size_t men = xs.size() - women;
  if (men == 0) return kNaN;
  return static_cast<double>(women) / static_cast<double>(men);
}

stats::BootstrapConfig StreamConfig(const ReportOptions &options, uint64_t stream) {
  stats::BootstrapConfig config;
  config.iterations = options.bootstrap_iterations;
  config.seed = stats::DeriveSeed(options.seed, stream);
  return config;
}

std::vector<double> KnownCodes(const std::vector<const ExpertMention *> &mentions) {
  std::vector<double> codes;
  for (const ExpertMention *m : mentions) {
    double c = GenderCode(m->gender);
    if (c != kCodeUnknown) codes.push_back(c);
  }
  return codes;
}

Estimate RatioEstimate(const std::vector<const ExpertMention *> &mentions,
                       const ReportOptions &options, uint64_t stream) {
  Estimate e;
  GenderTally tally;
  for (const ExpertMention *m : mentions) tally.Add(m->gender);
  e.value = tally.ratio();
  if (!e.value) {
    e.undefined_reason = "no men";
    return e;
  }
  std::vector<double> codes = KnownCodes(mentions);
  e.bootstrap = stats::Bootstrap(codes, RatioStatistic, StreamConfig(options, stream));
  return e;
}

Estimate ProportionEstimate(const std::vector<double> &codes, double code,
                            const ReportOptions &options, uint64_t stream) {
  Estimate e;
  if (codes.empty()) {
    e.undefined_reason = "no mentions";
    return e;
  }
  e.value = Proportion(code)(codes);
  e.bootstrap = stats::Bootstrap(codes, Proportion(code), StreamConfig(options, stream));
  return e;
}

BoxStats Box(std::vector<double> values) {
  BoxStats b;
  b.n = values.size();
  if (values.empty()) return b;
  std::sort(values.begin(), values.end());
  b.min = values.front();
  b.max = values.back();
  b.q1 = stats::SortedQuantile(values, 0.25);
  b.median = stats::SortedQuantile(values, 0.5);
  b.q3 = stats::SortedQuantile(values, 0.75);
  double sum = 0;
  for (double v : values) sum += v;
  b.mean = sum / static_cast<double>(values.size());
  return b;
}

PrestigeSummary Summarize(const std::string &scope,
                          const std::vector<InstitutionRow> &rows,
                          int64_t InstitutionRow::*field) {
  PrestigeSummary s;
  s.scope = scope;
  s.institutions = rows.size();
  std::vector<double> ranks, counts;
  for (const InstitutionRow &r : rows) {
    ranks.push_back(r.rank);
    counts.push_back(static_cast<double>(r.*field));
    s.mentions += r.*field;
  }
  if (rows.empty()) {
    s.undefined_reason = "no ranked institutions";
    return s;
  }
  if (s.mentions == 0) {
    s.undefined_reason = "no mentions of ranked institutions";
    return s;
  }
  s.gini = stats::Gini(counts);
  try {
    s.spearman = stats::SpearmanTest(ranks, counts);
  } catch (const std::domain_error &e) {
    s.undefined_reason = std::string("spearman: ") + e.what();
  }
  return s;
}

std::vector<int> DefaultCutPoints() {
  std::vector<int> cuts;
  for (int n = 5; n <= 100; n += 5) cuts.push_back(n);
  return cuts;
}

}  // namespace

void GenderTally::Add(GenderLabel label) {
  switch (label.merged()) {
    case Gender::kMan:
      ++man;
      break;
    case Gender::kWoman:
      ++woman;
      break;
    default:
      ++unknown;
  }
  if (label.raw() == RawGender::kAndy) ++raw_andy;
  if (label.raw() == RawGender::kUnknown) ++raw_unknown;
}

std::optional<double> GenderTally::man_share() const { return Share(man, known()); }
std::optional<double> GenderTally::woman_share() const {
  return Share(woman, known());
}
std::optional<double> GenderTally::unknown_fraction() const {
  return Share(unknown, total());
}
std::optional<double> GenderTally::raw_unknown_fraction() const {
  return Share(raw_unknown, total());
}
std::optional<double> GenderTally::ratio() const { return Share(woman, man); }

AuditReport BuildReport(const std::vector<ExpertMention> &mentions,
                        const SourceConfig &sources, const Gazetteer &gazetteer,
                        const ReportOptions &options) {
  if (options.bootstrap_iterations < 1) {
    throw std::invalid_argument("bootstrap iterations must be >= 1");
  }
  if (options.bin_width < 1) throw std::invalid_argument("bin width must be >= 1");

  AuditReport report;
  report.options = options;
  report.empty = mentions.empty();
  report.cut_points = options.cut_points.empty() ? DefaultCutPoints() : options.cut_points;

  std::vector<const Outlet *> outlets = sources.Ordered();
  std::unordered_map<std::string, size_t> outlet_index;
  for (size_t i = 0; i < outlets.size(); ++i) outlet_index[outlets[i]->key] = i;
  for (const ExpertMention &m : mentions) {
    if (!outlet_index.count(m.source)) {
      throw std::invalid_argument("mention from outlet missing in source config: " +
                                  m.source);
    }
  }

  std::vector<const ExpertMention *> all;
  for (const ExpertMention &m : mentions) all.push_back(&m);

  // Totals and composition.
  std::set<std::pair<std::string, int>> sentences;
  for (const ExpertMention &m : mentions) {
    report.gender.mentions.Add(m.gender);
    sentences.emplace(m.article_id, m.sentence_index);
    if (m.org_link) ++report.totals.linked_mentions;
  }
  std::vector<NamedMention> named;
  for (const ExpertMention &m : mentions) named.push_back({m.speaker, m.gender});
  std::vector<UniqueExpert> experts = ResolveUniqueExperts(named, options.unique_gender);
  for (const UniqueExpert &e : experts) report.gender.unique.Add(e.gender);
  report.totals.mentions = static_cast<int64_t>(mentions.size());
  report.totals.unique_experts = static_cast<int64_t>(experts.size());
  report.totals.sentences_with_mentions = static_cast<int64_t>(sentences.size());
  report.totals.unknown_fraction_pre_merge = report.gender.mentions.raw_unknown_fraction();
  report.totals.unknown_fraction_post_merge = report.gender.mentions.unknown_fraction();
  report.gender.ratio = RatioEstimate(all, options, kStreamRatio);

  // Provenance.
  for (const ExpertMention &m : mentions) {
    ++report.provenance.by_label[m.detectors.Label()];
    for (size_t k = 0; k < 3; ++k) {
      if (m.detectors.Contains(kAllDetectors[k])) ++report.provenance.any_detector[k];
    }
    if (m.detectors == DetectorSet(Detector::kDirectPattern)) {
      ++report.provenance.direct_pattern_only;
    } else {
      ++report.provenance.other;
    }
  }

  // Gender by organization type, unknown gender included.
  for (OrgType type : kAllOrgTypes) {
    OrgTypeGender row;
    row.type = type;
    std::vector<double> codes;
    for (const ExpertMention &m : mentions) {
      if (!m.org_link || m.org_link->type != type) continue;
      row.tally.Add(m.gender);
      codes.push_back(GenderCode(m.gender));
    }
    uint64_t stream = kStreamOrgType + static_cast<uint64_t>(type);
    row.man = ProportionEstimate(codes, kCodeMan, options, stream);
    row.woman = ProportionEstimate(codes, kCodeWoman, options, stream);
    row.unknown = ProportionEstimate(codes, kCodeUnknown, options, stream);
    report.gender_by_org_type.push_back(std::move(row));
  }

  // Per outlet: gender ratio and organization types.
  std::vector<std::vector<const ExpertMention *>> by_outlet(outlets.size());
  for (const ExpertMention &m : mentions) by_outlet[outlet_index[m.source]].push_back(&m);
  std::array<std::vector<double>, 2> outlet_shares;
  std::array<std::vector<double>, 2> replicate_shares;
  std::array<std::string, 2> replicate_missing;
  for (size_t i = 0; i < outlets.size(); ++i) {
    OutletRow row;
    row.key = outlets[i]->key;
    row.display_name = outlets[i]->display_name;
    row.ideology = outlets[i]->ideology;
    row.mentions = static_cast<int64_t>(by_outlet[i].size());
    for (const ExpertMention *m : by_outlet[i]) {
      row.gender.Add(m->gender);
      if (m->org_link) {
        ++row.linked;
        ++row.org_type_counts[static_cast<size_t>(m->org_link->type)];
      }
    }
    for (size_t t = 0; t < 3; ++t) row.org_type_shares[t] = Share(row.org_type_counts[t], row.linked);
    row.ratio = RatioEstimate(by_outlet[i], options, kStreamOutletRatio + i);
    row.women_share = row.gender.woman_share();
    size_t group = row.ideology == Ideology::kLeft ? 0 : 1;
    if (row.women_share) outlet_shares[group].push_back(*row.women_share);
    std::vector<double> codes = KnownCodes(by_outlet[i]);
    if (!codes.empty()) {
      for (double r : stats::BootstrapReplicates(codes, Proportion(kCodeWoman),
                                                 StreamConfig(options, kStreamOutletShare + i))) {
        replicate_shares[group].push_back(r);
      }
    }
    report.outlets.push_back(std::move(row));
  }

  auto kruskal = [](const std::string &mode, const std::array<std::vector<double>, 2> &groups) {
    KruskalWallisSection s;
    s.mode = mode;
    s.group_sizes = {groups[0].size(), groups[1].size()};
    if (groups[0].empty() || groups[1].empty()) {
      s.undefined_reason = "an ideology group has no outlets with known-gender mentions";
      return s;
    }
    try {
      s.result = stats::KruskalWallis({groups[0], groups[1]});
    } catch (const std::domain_error &e) {
      s.undefined_reason = e.what();
    }
    return s;
  };
  report.kruskal_wallis.push_back(kruskal("per_outlet", outlet_shares));
  report.kruskal_wallis.push_back(kruskal("bootstrap_replicates", replicate_shares));

  // Prestige: every ranked institution, mentioned or not.
  std::unordered_map<std::string, size_t> world_row, health_row;
  for (const OrgRecord *r : gazetteer.WorldRanked()) {
    world_row[r->name] = report.institutions.size();
    report.institutions.push_back({r->name, *r->world_rank});
  }
  for (const OrgRecord *r : gazetteer.PublicHealthRanked()) {
    health_row[r->name] = report.public_health_institutions.size();
    report.public_health_institutions.push_back({r->name, *r->public_health_rank});
  }
  auto count_into = [](InstitutionRow &row, const ExpertMention &m, Ideology ideology) {
    ++row.mentions;
    ++(ideology == Ideology::kLeft ? row.left : row.right);
    if (m.gender.merged() == Gender::kMan) ++row.man;
    if (m.gender.merged() == Gender::kWoman) ++row.woman;
  };
  for (const ExpertMention &m : mentions) {
    if (!m.org_link || m.org_link->type != OrgType::kAcademic) continue;
    Ideology ideology = outlets[outlet_index[m.source]]->ideology;
    if (auto it = world_row.find(m.org_link->name); it != world_row.end()) {
      count_into(report.institutions[it->second], m, ideology);
    }
    if (auto it = health_row.find(m.org_link->name); it != health_row.end()) {
      count_into(report.public_health_institutions[it->second], m, ideology);
    }
  }
  report.prestige.push_back(Summarize("overall", report.institutions, &InstitutionRow::mentions));
  report.prestige.push_back(Summarize("left", report.institutions, &InstitutionRow::left));
  report.prestige.push_back(Summarize("right", report.institutions, &InstitutionRow::right));
  report.prestige.push_back(Summarize("man", report.institutions, &InstitutionRow::man));
  report.prestige.push_back(Summarize("woman", report.institutions, &InstitutionRow::woman));
  report.prestige.push_back(Summarize("public_health", report.public_health_institutions,
                                      &InstitutionRow::mentions));

  // Rank bins split by ideology.
  std::map<int, std::map<std::string, double>> by_rank;
  for (const InstitutionRow &r : report.institutions) {
    auto &groups = by_rank[r.rank];
    groups["left"] += static_cast<double>(r.left);
    groups["right"] += static_cast<double>(r.right);
  }
  for (stats::RankBin &bin : stats::BinnedShares(by_rank, options.bin_width)) {
    PrestigeBin pb;
    for (const auto &[group, shares] : bin.institution_shares) pb.boxes[group] = Box(shares);
    pb.bin = std::move(bin);
    report.prestige_bins.push_back(std::move(pb));
  }

  // Cumulative top-n curves.
  for (const auto &[group, field] :
       std::vector<std::pair<std::string, int64_t InstitutionRow::*>>{
           {"overall", &InstitutionRow::mentions},
           {"man", &InstitutionRow::man},
           {"woman", &InstitutionRow::woman}}) {
    CumulativeCurve curve;
    curve.group = group;
    std::map<int, double> counts;
    for (const InstitutionRow &r : report.institutions) {
      counts[r.rank] += static_cast<double>(r.*field);
      curve.mentions += r.*field;
    }
    if (curve.mentions > 0) curve.shares = stats::CumulativeTopN(counts, report.cut_points);
    report.cumulative.push_back(std::move(curve));
  }

  // Sentence length by speaker gender.
  std::vector<double> len_man, len_woman;
  for (const ExpertMention &m : mentions) {
    if (m.gender.merged() == Gender::kMan) len_man.push_back(m.sentence_char_length);
    if (m.gender.merged() == Gender::kWoman) len_woman.push_back(m.sentence_char_length);
  }
  SentenceLength &sl = report.sentence_length;
  sl.n_man = len_man.size();
  sl.n_woman = len_woman.size();
  auto mean = [](const std::vector<double> &v) -> std::optional<double> {
    if (v.empty()) return std::nullopt;
    double s = 0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  sl.mean_man = mean(len_man);
  sl.mean_woman = mean(len_woman);
  try {
    sl.welch = stats::WelchT(len_man, len_woman);
  } catch (const std::domain_error &e) {
    sl.undefined_reason = e.what();
  }

  // Co-mention on the set of sentences with a known-gender expert.
  std::map<std::pair<std::string, int>, std::pair<bool, bool>> present;
  for (const ExpertMention &m : mentions) {
    Gender g = m.gender.merged();
    if (g == Gender::kUnknown) continue;
    auto &p = present[{m.article_id, m.sentence_index}];
    (g == Gender::kMan ? p.first : p.second) = true;
  }
  CoMention &cm = report.co_mention;
  for (const auto &[key, p] : present) {
    ++cm.sentences;
    cm.man_sentences += p.first;
    cm.woman_sentences += p.second;
    cm.mixed_sentences += p.first && p.second;
  }
  cm.man_given_woman = Share(cm.mixed_sentences, cm.woman_sentences);
  cm.woman_given_man = Share(cm.mixed_sentences, cm.man_sentences);

  return report;
}

namespace {

json Num(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

json BootstrapJson(const stats::BootstrapResult &b) {
  json j;
  j["mean"] = Num(b.mean);
  j["std"] = Num(b.std);
  j["ci_low"] = Num(b.ci_low);
  j["ci_high"] = Num(b.ci_high);
  j["n"] = b.n;
  j["iterations"] = b.iterations;
  j["valid_iterations"] = b.valid_iterations;
  return j;
}

json EstimateJson(const Estimate &e) {
  json j;
  j["value"] = Num(e.value);
  j["bootstrap"] = e.bootstrap ? BootstrapJson(*e.bootstrap) : json(nullptr);
  if (!e.undefined_reason.empty()) j["undefined"] = e.undefined_reason;
  return j;
}

json TallyJson(const GenderTally &t) {
  json j;
  j["n"] = t.total();
  j["man"] = t.man;
  j["woman"] = t.woman;
  j["unknown"] = t.unknown;
  j["raw_andy"] = t.raw_andy;
  j["raw_unknown"] = t.raw_unknown;
  j["man_share"] = Num(t.man_share());
  j["woman_share"] = Num(t.woman_share());
  j["unknown_fraction"] = Num(t.unknown_fraction());
  return j;
}

json InstitutionJson(const InstitutionRow &r) {
  json j;
  j["rank"] = r.rank;
  j["name"] = r.name;
  j["mentions"] = r.mentions;
  j["left"] = r.left;
  j["right"] = r.right;
  j["man"] = r.man;
  j["woman"] = r.woman;
  return j;
}

json BoxJson(const BoxStats &b) {
  json j;
  j["n"] = b.n;
  if (b.n == 0) return j;
  j["min"] = b.min;
  j["q1"] = b.q1;
  j["median"] = b.median;
  j["q3"] = b.q3;
  j["max"] = b.max;
  j["mean"] = b.mean;
  return j;
}

}  // namespace

std::string ReportToJson(const AuditReport &r) {
  json root;
  json meta;
  meta["seed"] = r.options.seed;
  meta["bootstrap_iterations"] = r.options.bootstrap_iterations;
  meta["bin_width"] = r.options.bin_width;
  meta["unique_gender_policy"] =
      r.options.unique_gender == GenderPolicy::kMajority ? "majority" : "first_mention";
  for (const auto &[k, v] : r.meta) meta[k] = v;
  root["meta"] = meta;
  root["empty"] = r.empty;

  json totals;
  totals["mentions"] = r.totals.mentions;
  totals["unique_experts"] = r.totals.unique_experts;
  totals["sentences_with_mentions"] = r.totals.sentences_with_mentions;
  totals["linked_mentions"] = r.totals.linked_mentions;
  totals["unknown_fraction_pre_merge"] = Num(r.totals.unknown_fraction_pre_merge);
  totals["unknown_fraction_post_merge"] = Num(r.totals.unknown_fraction_post_merge);
  root["totals"] = totals;

  json prov;
  prov["by_label"] = json::object();
  for (const auto &[label, n] : r.provenance.by_label) prov["by_label"][label] = n;
  json any;
  for (size_t k = 0; k < 3; ++k) {
    any[std::string(DetectorName(kAllDetectors[k]))] = r.provenance.any_detector[k];
  }
  prov["any_detector"] = any;
  prov["direct_pattern_only"] = r.provenance.direct_pattern_only;
  prov["other"] = r.provenance.other;
  prov["direct_pattern_only_share"] =
      Num(Share(r.provenance.direct_pattern_only, r.totals.mentions));
  root["provenance"] = prov;

  json gender;
  gender["mentions"] = TallyJson(r.gender.mentions);
  gender["unique"] = TallyJson(r.gender.unique);
  gender["women_to_men_ratio"] = EstimateJson(r.gender.ratio);
  root["gender_composition"] = gender;

  json by_type = json::array();
  for (const OrgTypeGender &row : r.gender_by_org_type) {
    json j;
    j["org_type"] = OrgTypeName(row.type);
    j["counts"] = TallyJson(row.tally);
    j["man"] = EstimateJson(row.man);
    j["woman"] = EstimateJson(row.woman);
    j["unknown"] = EstimateJson(row.unknown);
    by_type.push_back(j);
  }
  root["gender_by_org_type"] = by_type;

  json outlets = json::array();
  for (const OutletRow &o : r.outlets) {
    json j;
    j["outlet"] = o.key;
    j["display_name"] = o.display_name;
    j["ideology"] = IdeologyName(o.ideology);
    j["mentions"] = o.mentions;
    j["gender"] = TallyJson(o.gender);
    j["women_to_men_ratio"] = EstimateJson(o.ratio);
    j["women_share"] = Num(o.women_share);
    json types;
    types["linked"] = o.linked;
    for (OrgType t : kAllOrgTypes) {
      size_t k = static_cast<size_t>(t);
      json cell;
      cell["count"] = o.org_type_counts[k];
      cell["share"] = Num(o.org_type_shares[k]);
      types[std::string(OrgTypeName(t))] = cell;
    }
    j["org_types"] = types;
    outlets.push_back(j);
  }
  root["outlets"] = outlets;

  json kw = json::array();
  for (const KruskalWallisSection &s : r.kruskal_wallis) {
    json j;
    j["mode"] = s.mode;
    j["statistic"] = s.statistic;
    j["group_sizes"] = {{"left", s.group_sizes[0]}, {"right", s.group_sizes[1]}};
    if (s.result) {
      j["h"] = s.result->h;
      j["p"] = s.result->p;
      j["df"] = s.result->df;
      j["n"] = s.result->n;
    } else {
      j["h"] = nullptr;
      j["p"] = nullptr;
      j["undefined"] = s.undefined_reason;
    }
    kw.push_back(j);
  }
  root["kruskal_wallis"] = kw;

  json prestige;
  json summaries = json::array();
  for (const PrestigeSummary &s : r.prestige) {
    json j;
    j["scope"] = s.scope;
    j["institutions"] = s.institutions;
    j["mentions"] = s.mentions;
    j["gini"] = Num(s.gini);
    if (s.spearman) {
      j["spearman"] = {{"rho", Num(s.spearman->rho)},
                       {"p_two_sided", Num(s.spearman->p_two_sided)},
                       {"n", s.spearman->n}};
    } else {
      j["spearman"] = nullptr;
    }
    if (!s.undefined_reason.empty()) j["undefined"] = s.undefined_reason;
    summaries.push_back(j);
  }
  prestige["summaries"] = summaries;
  json inst = json::array();
  for (const InstitutionRow &row : r.institutions) inst.push_back(InstitutionJson(row));
  prestige["institutions"] = inst;
  json ph = json::array();
  for (const InstitutionRow &row : r.public_health_institutions) ph.push_back(InstitutionJson(row));
  prestige["public_health_institutions"] = ph;
  root["prestige"] = prestige;

  json bins = json::array();
  for (const PrestigeBin &pb : r.prestige_bins) {
    json j;
    j["rank_low"] = pb.bin.rank_low;
    j["rank_high"] = pb.bin.rank_high;
    j["mentions"] = pb.bin.total;
    json shares = json::object();
    for (const auto &[g, v] : pb.bin.shares) shares[g] = v;
    j["shares"] = shares;
    json boxes = json::object();
    for (const auto &[g, b] : pb.boxes) boxes[g] = BoxJson(b);
    j["institution_shares"] = boxes;
    bins.push_back(j);
  }
  root["prestige_bins"] = bins;

  json cumulative;
  cumulative["cut_points"] = r.cut_points;
  json curves = json::array();
  for (const CumulativeCurve &c : r.cumulative) {
    json j;
    j["group"] = c.group;
    j["mentions"] = c.mentions;
    j["shares"] = c.shares.empty() ? json(nullptr) : json(c.shares);
    curves.push_back(j);
  }
  cumulative["curves"] = curves;
  root["cumulative_top_n"] = cumulative;

  json sl;
  sl["n_man"] = r.sentence_length.n_man;
  sl["n_woman"] = r.sentence_length.n_woman;
  sl["mean_man"] = Num(r.sentence_length.mean_man);
  sl["mean_woman"] = Num(r.sentence_length.mean_woman);
  if (r.sentence_length.welch) {
    const stats::WelchResult &w = *r.sentence_length.welch;
    sl["welch"] = {{"t", w.t}, {"df", w.df}, {"p_two_sided", w.p_two_sided}};
  } else {
    sl["welch"] = nullptr;
    sl["undefined"] = r.sentence_length.undefined_reason;
  }
  root["sentence_length"] = sl;

  json cm;
  cm["sentences"] = r.co_mention.sentences;
  cm["man_sentences"] = r.co_mention.man_sentences;
  cm["woman_sentences"] = r.co_mention.woman_sentences;
  cm["mixed_sentences"] = r.co_mention.mixed_sentences;
  cm["man_given_woman"] = Num(r.co_mention.man_given_woman);
  cm["woman_given_man"] = Num(r.co_mention.woman_given_man);
  root["co_mention"] = cm;

  return root.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

AuditResult RunAudit(const AuditConfig &config, WarningSink warn) {
  std::unique_ptr<PipelineResources> res = PipelineResources::Load(
      config.lexicon_dir, config.gazetteer_dir, config.sources_path, warn);
  AuditResult result;
  std::vector<Article> articles = ReadArticles(config.corpus_path, &result.reader, warn);
  Extractor extractor(*res, config.extract);
  result.mentions = extractor.ExtractAll(articles, &result.extract, warn);
  result.report = BuildReport(result.mentions, res->sources, res->gazetteer, config.report);
  result.report.meta["outlet_suppression"] = config.extract.suppress_outlet ? "on" : "off";
  return result;
}

}  // namespace expertaudit
