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

#include "expertaudit/emit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

#include "svg.h"

namespace expertaudit {
namespace {

constexpr const char *kManColor = "#4c72b0";
constexpr const char *kWomanColor = "#dd8452";
constexpr const char *kUnknownColor = "#999999";
constexpr const char *kLeftColor = "#3b6fd1";
constexpr const char *kRightColor = "#d13b3b";
constexpr const char *kOrgColors[] = {"#55a868", "#8172b3", "#c44e52"};

std::string Int(int64_t v) { return std::to_string(v); }

std::string Str(std::string_view s) { return std::string(s); }

void WriteFile(const std::filesystem::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  out.close();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<std::string> BootstrapCells(const Estimate &e) {
  if (!e.bootstrap) return {"", "", "", "", ""};
  const stats::BootstrapResult &b = *e.bootstrap;
  return {FormatNumber(b.mean), FormatNumber(b.std), FormatNumber(b.ci_low),
          FormatNumber(b.ci_high), Int(b.valid_iterations)};
}

std::vector<std::string> Concat(std::vector<std::string> a,
                                const std::vector<std::string> &b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const char *IdeologyColor(Ideology i) {
  return i == Ideology::kLeft ? kLeftColor : kRightColor;
}

void Title(svg::Document &doc, double width, std::string_view text) {
  doc.Text(width / 2, 24, text, 15, "middle");
}

void Legend(svg::Document &doc, double x, double y,
            const std::vector<std::pair<std::string, std::string>> &entries) {
  for (const auto &[label, color] : entries) {
    doc.Rect(x, y - 10, 12, 12, color);
    doc.Text(x + 18, y, label, 12);
    y += 18;
  }
}

void ErrorBar(svg::Document &doc, const svg::Axes &axes, double x, const Estimate &e) {
  if (!e.bootstrap || e.bootstrap->valid_iterations == 0) return;
  double lo = axes.Y(e.bootstrap->ci_low), hi = axes.Y(e.bootstrap->ci_high);
  doc.Line(x, lo, x, hi, "#222222", 1.2);
  doc.Line(x - 4, lo, x + 4, lo, "#222222", 1.2);
  doc.Line(x - 4, hi, x + 4, hi, "#222222", 1.2);
}

// Pie of (label, value, color) slices centered at (cx, cy).
void Pie(svg::Document &doc, double cx, double cy, double r,
         const std::vector<std::tuple<std::string, double, std::string>> &slices) {
  double total = 0;
  for (const auto &s : slices) total += std::get<1>(s);
  if (total <= 0) {
    doc.Circle(cx, cy, r, "#eeeeee", "#999999");
    doc.Text(cx, cy + 4, "no data", 12, "middle");
    return;
  }
  double angle = -std::numbers::pi / 2;
  for (const auto &[label, value, color] : slices) {
    double frac = value / total;
    if (frac <= 0) continue;
    if (frac >= 1) {
      doc.Circle(cx, cy, r, color);
    } else {
      double end = angle + 2 * std::numbers::pi * frac;
      char d[256];
      std::snprintf(d, sizeof d, "M %.2f %.2f L %.2f %.2f A %.2f %.2f 0 %d 1 %.2f %.2f Z",
                    cx, cy, cx + r * std::cos(angle), cy + r * std::sin(angle), r, r,
                    frac > 0.5 ? 1 : 0, cx + r * std::cos(end), cy + r * std::sin(end));
      doc.Path(d, color, "white");
    }
    double mid = angle + std::numbers::pi * frac;
    char pct[32];
    std::snprintf(pct, sizeof pct, "%s %.1f%%", label.c_str(), 100 * frac);
    doc.Text(cx + 0.6 * r * std::cos(mid), cy + 0.6 * r * std::sin(mid) + 4, pct, 12,
             "middle");
    angle += 2 * std::numbers::pi * frac;
  }
}

std::string GenderPies(const AuditReport &r) {
  svg::Document doc(640, 340);
  Title(doc, 640, "Expert gender: total and unique mentions (unknown omitted)");
  auto slices = [](const GenderTally &t) {
    return std::vector<std::tuple<std::string, double, std::string>>{
        {"men", static_cast<double>(t.man), kManColor},
        {"women", static_cast<double>(t.woman), kWomanColor}};
  };
  Pie(doc, 170, 180, 120, slices(r.gender.mentions));
  Pie(doc, 470, 180, 120, slices(r.gender.unique));
  doc.Text(170, 325, "total mentions (n=" + Int(r.gender.mentions.known()) + ")", 13,
           "middle");
  doc.Text(470, 325, "unique experts (n=" + Int(r.gender.unique.known()) + ")", 13,
           "middle");
  return doc.Render();
}

std::string GenderByOrgType(const AuditReport &r) {
  svg::Document doc(640, 400);
  Title(doc, 640, "Gender by organization type (bootstrap 95% CI)");
  svg::Axes axes(80, 50, 420, 290);
  axes.SetX(0, 3);
  axes.SetY(0, 1);
  axes.Draw(doc, "", "share of mentions", 3, 5);
  double group_w = axes.width() / 3;
  double bar_w = group_w / 4;
  for (size_t g = 0; g < r.gender_by_org_type.size(); ++g) {
    const OrgTypeGender &row = r.gender_by_org_type[g];
    double x0 = axes.left() + g * group_w + bar_w / 2;
    const Estimate *parts[] = {&row.man, &row.woman, &row.unknown};
    const char *colors[] = {kManColor, kWomanColor, kUnknownColor};
    for (int k = 0; k < 3; ++k) {
      double v = parts[k]->value.value_or(0);
      double x = x0 + k * bar_w;
      doc.Rect(x, axes.Y(v), bar_w - 2, axes.bottom() - axes.Y(v), colors[k]);
      ErrorBar(doc, axes, x + bar_w / 2 - 1, *parts[k]);
    }
    doc.Text(axes.left() + (g + 0.5) * group_w, axes.bottom() + 18,
             Str(OrgTypeName(row.type)) + " (n=" + Int(row.tally.total()) + ")", 12,
             "middle");
  }
  Legend(doc, 520, 70, {{"men", kManColor}, {"women", kWomanColor}, {"unknown", kUnknownColor}});
  return doc.Render();
}

std::string OrgTypeByOutlet(const AuditReport &r) {
  double height = 90 + 36 * std::max<size_t>(1, r.outlets.size());
  svg::Document doc(680, height);
  Title(doc, 680, "Organization types quoted per outlet");
  svg::Axes axes(150, 45, 380, height - 90);
  axes.SetX(0, 1);
  axes.SetY(0, 1);
  axes.Draw(doc, "share of linked mentions", "", 4, 0);
  double row_h = axes.height() / std::max<size_t>(1, r.outlets.size());
  for (size_t i = 0; i < r.outlets.size(); ++i) {
    const OutletRow &o = r.outlets[i];
    double y = axes.top() + i * row_h + 4;
    double x = axes.left();
    for (size_t t = 0; t < 3; ++t) {
      double share = o.org_type_shares[t].value_or(0);
      doc.Rect(x, y, share * axes.width(), row_h - 8, kOrgColors[t]);
      x += share * axes.width();
    }
    doc.Text(axes.left() - 8, y + row_h / 2, o.display_name + " (n=" + Int(o.linked) + ")",
             12, "end");
  }
  Legend(doc, 545, 70,
         {{"academic", kOrgColors[0]}, {"federal", kOrgColors[1]}, {"think tank", kOrgColors[2]}});
  return doc.Render();
}

std::string OutletRatios(const AuditReport &r) {
  svg::Document doc(640, 400);
  Title(doc, 640, "Women to men ratio per outlet (bootstrap 95% CI)");
  svg::Axes axes(80, 50, 500, 280);
  double hi = 0.1;
  for (const OutletRow &o : r.outlets) {
    hi = std::max(hi, o.ratio.value.value_or(0));
    if (o.ratio.bootstrap && std::isfinite(o.ratio.bootstrap->ci_high)) {
      hi = std::max(hi, o.ratio.bootstrap->ci_high);
    }
  }
  axes.SetX(0, static_cast<double>(std::max<size_t>(1, r.outlets.size())));
  axes.SetY(0, hi * 1.1);
  axes.Draw(doc, "", "women / men", 0, 5);
  double w = axes.width() / std::max<size_t>(1, r.outlets.size());
  for (size_t i = 0; i < r.outlets.size(); ++i) {
    const OutletRow &o = r.outlets[i];
    double x = axes.left() + i * w + w * 0.15;
    if (o.ratio.value) {
      doc.Rect(x, axes.Y(*o.ratio.value), w * 0.7, axes.bottom() - axes.Y(*o.ratio.value),
               IdeologyColor(o.ideology));
      ErrorBar(doc, axes, x + w * 0.35, o.ratio);
    }
    doc.Text(x + w * 0.35, axes.bottom() + 18, o.key, 12, "middle");
  }
  if (hi * 1.1 >= 1.0) {
    doc.Line(axes.left(), axes.Y(1.0), axes.right(), axes.Y(1.0), "#888888", 0.8);
  }
  Legend(doc, 460, 375, {{"left", kLeftColor}});
  Legend(doc, 530, 375, {{"right", kRightColor}});
  return doc.Render();
}

std::string RankScatter(const std::vector<InstitutionRow> &rows, const std::string &title,
                        const std::string &x_label, bool log) {
  svg::Document doc(640, 420);
  Title(doc, 640, title);
  svg::Axes axes(90, 50, 500, 300);
  int max_rank = 1;
  int64_t max_count = 1;
  for (const InstitutionRow &row : rows) {
    max_rank = std::max(max_rank, row.rank);
    max_count = std::max(max_count, row.mentions);
  }
  if (log) {
    axes.SetX(1, std::max(10.0, static_cast<double>(max_rank)), true);
    axes.SetY(1, std::max(10.0, static_cast<double>(max_count)), true);
  } else {
    axes.SetX(0, max_rank);
    axes.SetY(0, static_cast<double>(max_count) * 1.05);
  }
  axes.Draw(doc, x_label, "mentions");
  for (const InstitutionRow &row : rows) {
    if (row.mentions == 0) continue;
    doc.Circle(axes.X(row.rank), axes.Y(static_cast<double>(row.mentions)), 3.5, kManColor,
               "#1f3b66");
  }
  return doc.Render();
}

std::string PrestigeBins(const AuditReport &r) {
  double width = 120 + 110 * std::max<size_t>(1, r.prestige_bins.size());
  svg::Document doc(width, 420);
  Title(doc, width, "Share of institution mentions by ideology, binned by rank");
  svg::Axes axes(80, 50, width - 120, 300);
  axes.SetX(0, static_cast<double>(std::max<size_t>(1, r.prestige_bins.size())));
  axes.SetY(0, 1);
  axes.Draw(doc, "rank bin", "share of institution mentions", 0, 5);
  double slot = axes.width() / std::max<size_t>(1, r.prestige_bins.size());
  for (size_t i = 0; i < r.prestige_bins.size(); ++i) {
    const PrestigeBin &pb = r.prestige_bins[i];
    int k = 0;
    for (const auto &[group, color] : std::vector<std::pair<std::string, const char *>>{
             {"left", kLeftColor}, {"right", kRightColor}}) {
      double cx = axes.left() + i * slot + slot * (k == 0 ? 0.3 : 0.7);
      ++k;
      auto it = pb.boxes.find(group);
      if (it == pb.boxes.end() || it->second.n == 0) continue;
      const BoxStats &b = it->second;
      double bw = slot * 0.15;
      doc.Line(cx, axes.Y(b.min), cx, axes.Y(b.q1), color);
      doc.Line(cx, axes.Y(b.q3), cx, axes.Y(b.max), color);
      doc.Rect(cx - bw, axes.Y(b.q3), 2 * bw, axes.Y(b.q1) - axes.Y(b.q3), "white", color);
      doc.Line(cx - bw, axes.Y(b.median), cx + bw, axes.Y(b.median), color, 2);
      doc.Circle(cx, axes.Y(b.mean), 3.5, "#e3c515", "#7a6a0b");
    }
    doc.Text(axes.left() + (i + 0.5) * slot, axes.bottom() + 18,
             std::to_string(pb.bin.rank_low) + "-" + std::to_string(pb.bin.rank_high), 12,
             "middle");
  }
  Legend(doc, 20, 395, {{"left", kLeftColor}});
  Legend(doc, 90, 395, {{"right", kRightColor}});
  return doc.Render();
}

std::string CumulativeCurves(const AuditReport &r) {
  svg::Document doc(640, 420);
  Title(doc, 640, "Cumulative share of academic mentions by top-n institutions");
  svg::Axes axes(80, 50, 420, 300);
  double max_cut = r.cut_points.empty() ? 1 : *std::max_element(r.cut_points.begin(),
                                                                r.cut_points.end());
  axes.SetX(0, max_cut);
  axes.SetY(0, 1);
  axes.Draw(doc, "top n institutions", "cumulative share");
  std::map<std::string, const char *> colors = {
      {"overall", "#555555"}, {"man", kManColor}, {"woman", kWomanColor}};
  std::vector<std::pair<std::string, std::string>> legend;
  for (const CumulativeCurve &c : r.cumulative) {
    if (c.shares.empty()) continue;
    std::vector<std::pair<double, double>> pts;
    for (size_t i = 0; i < c.shares.size(); ++i) {
      pts.emplace_back(axes.X(r.cut_points[i]), axes.Y(c.shares[i]));
    }
    doc.Polyline(pts, colors[c.group]);
    for (const auto &[x, y] : pts) doc.Circle(x, y, 2.5, colors[c.group]);
    legend.emplace_back(c.group + " (n=" + Int(c.mentions) + ")", colors[c.group]);
  }
  Legend(doc, 515, 70, legend);
  return doc.Render();
}

}  // namespace

std::vector<OutputFormat> ParseFormats(std::string_view list) {
  std::vector<OutputFormat> out;
  std::set<OutputFormat> seen;
  size_t start = 0;
  while (start <= list.size()) {
    size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string name = AsciiLower(Trim(list.substr(start, comma - start)));
    OutputFormat f;
    if (name == "json") {
      f = OutputFormat::kJson;
    } else if (name == "csv") {
      f = OutputFormat::kCsv;
    } else if (name == "svg") {
      f = OutputFormat::kSvg;
    } else {
      throw std::invalid_argument("unknown output format: '" + name + "'");
    }
    if (seen.insert(f).second) out.push_back(f);
    start = comma + 1;
  }
  return out;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::AddRow(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument("csv row has " + std::to_string(row.size()) +
                                " fields, header has " + std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

std::string CsvTable::Quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string CsvTable::Render() const {
  std::string out;
  auto record = [&](const std::vector<std::string> &fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ',';
      out += Quote(fields[i]);
    }
    out += "\r\n";
  };
  record(header_);
  for (const auto &row : rows_) record(row);
  return out;
}

std::string FormatNumber(std::optional<double> value) {
  if (!value || !std::isfinite(*value)) return "";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, *value);
  if (ec != std::errc()) return "";
  return std::string(buf, end);
}

std::vector<std::pair<std::string, CsvTable>> ReportTables(const AuditReport &r) {
  std::vector<std::pair<std::string, CsvTable>> tables;

  CsvTable totals({"metric", "value"});
  totals.AddRow({"mentions", Int(r.totals.mentions)});
  totals.AddRow({"unique_experts", Int(r.totals.unique_experts)});
  totals.AddRow({"sentences_with_mentions", Int(r.totals.sentences_with_mentions)});
  totals.AddRow({"linked_mentions", Int(r.totals.linked_mentions)});
  totals.AddRow({"unknown_fraction_pre_merge", FormatNumber(r.totals.unknown_fraction_pre_merge)});
  totals.AddRow({"unknown_fraction_post_merge", FormatNumber(r.totals.unknown_fraction_post_merge)});
  tables.emplace_back("totals.csv", std::move(totals));

  CsvTable composition({"scope", "n", "man", "woman", "unknown", "man_share", "woman_share",
                        "unknown_fraction"});
  for (const auto &[scope, t] : {std::pair<std::string, const GenderTally *>{"mentions", &r.gender.mentions},
                                 {"unique", &r.gender.unique}}) {
    composition.AddRow({scope, Int(t->total()), Int(t->man), Int(t->woman), Int(t->unknown),
                        FormatNumber(t->man_share()), FormatNumber(t->woman_share()),
                        FormatNumber(t->unknown_fraction())});
  }
  tables.emplace_back("gender_composition.csv", std::move(composition));

  std::vector<std::string> boot_header = {"boot_mean", "boot_std", "ci_low", "ci_high",
                                          "valid_iterations"};
  CsvTable by_type(Concat({"org_type", "n", "gender", "share"}, boot_header));
  for (const OrgTypeGender &row : r.gender_by_org_type) {
    for (const auto &[name, e] : {std::pair<std::string, const Estimate *>{"man", &row.man},
                                  {"woman", &row.woman},
                                  {"unknown", &row.unknown}}) {
      by_type.AddRow(Concat({Str(OrgTypeName(row.type)), Int(row.tally.total()), name,
                             FormatNumber(e->value)},
                            BootstrapCells(*e)));
    }
  }
  tables.emplace_back("gender_by_org_type.csv", std::move(by_type));

  CsvTable org_types({"outlet", "ideology", "linked", "academic", "federal", "think_tank",
                      "academic_share", "federal_share", "think_tank_share"});
  CsvTable ratios(Concat({"scope", "ideology", "mentions", "men", "women", "unknown",
                          "ratio", "women_share"},
                         boot_header));
  const GenderTally &all = r.gender.mentions;
  ratios.AddRow(Concat({"all", "", Int(r.totals.mentions), Int(all.man), Int(all.woman),
                        Int(all.unknown), FormatNumber(r.gender.ratio.value),
                        FormatNumber(all.woman_share())},
                       BootstrapCells(r.gender.ratio)));
  for (const OutletRow &o : r.outlets) {
    org_types.AddRow({o.key, Str(IdeologyName(o.ideology)), Int(o.linked),
                      Int(o.org_type_counts[0]), Int(o.org_type_counts[1]),
                      Int(o.org_type_counts[2]), FormatNumber(o.org_type_shares[0]),
                      FormatNumber(o.org_type_shares[1]), FormatNumber(o.org_type_shares[2])});
    ratios.AddRow(Concat({o.key, Str(IdeologyName(o.ideology)), Int(o.mentions),
                          Int(o.gender.man), Int(o.gender.woman), Int(o.gender.unknown),
                          FormatNumber(o.ratio.value), FormatNumber(o.women_share)},
                         BootstrapCells(o.ratio)));
  }
  tables.emplace_back("org_type_by_outlet.csv", std::move(org_types));
  tables.emplace_back("gender_ratio.csv", std::move(ratios));

  CsvTable kw({"mode", "statistic", "n_left", "n_right", "h", "df", "p", "undefined"});
  for (const KruskalWallisSection &s : r.kruskal_wallis) {
    kw.AddRow({s.mode, s.statistic, Int(s.group_sizes[0]), Int(s.group_sizes[1]),
               s.result ? FormatNumber(s.result->h) : "",
               s.result ? Int(s.result->df) : "",
               s.result ? FormatNumber(s.result->p) : "", s.undefined_reason});
  }
  tables.emplace_back("kruskal_wallis.csv", std::move(kw));

  auto institutions = [](const std::vector<InstitutionRow> &rows) {
    CsvTable t({"rank", "name", "mentions", "left", "right", "man", "woman"});
    for (const InstitutionRow &row : rows) {
      t.AddRow({Int(row.rank), row.name, Int(row.mentions), Int(row.left), Int(row.right),
                Int(row.man), Int(row.woman)});
    }
    return t;
  };
  tables.emplace_back("prestige_institutions.csv", institutions(r.institutions));
  tables.emplace_back("public_health_institutions.csv",
                      institutions(r.public_health_institutions));

  CsvTable summary({"scope", "institutions", "mentions", "gini", "spearman_rho",
                    "spearman_p", "spearman_n", "undefined"});
  for (const PrestigeSummary &s : r.prestige) {
    summary.AddRow({s.scope, Int(s.institutions), Int(s.mentions), FormatNumber(s.gini),
                    s.spearman ? FormatNumber(s.spearman->rho) : "",
                    s.spearman ? FormatNumber(s.spearman->p_two_sided) : "",
                    s.spearman ? Int(s.spearman->n) : "", s.undefined_reason});
  }
  tables.emplace_back("prestige_summary.csv", std::move(summary));

  CsvTable bins({"rank_low", "rank_high", "bin_mentions", "ideology", "bin_share",
                 "institutions", "min", "q1", "median", "q3", "max", "mean"});
  for (const PrestigeBin &pb : r.prestige_bins) {
    for (const std::string group : {"left", "right"}) {
      auto share = pb.bin.shares.find(group);
      auto box = pb.boxes.find(group);
      std::vector<std::string> row = {
          Int(pb.bin.rank_low), Int(pb.bin.rank_high), FormatNumber(pb.bin.total), group,
          share == pb.bin.shares.end() ? "" : FormatNumber(share->second)};
      if (box == pb.boxes.end() || box->second.n == 0) {
        row.insert(row.end(), {"0", "", "", "", "", "", ""});
      } else {
        const BoxStats &b = box->second;
        row.insert(row.end(), {Int(b.n), FormatNumber(b.min), FormatNumber(b.q1),
                               FormatNumber(b.median), FormatNumber(b.q3),
                               FormatNumber(b.max), FormatNumber(b.mean)});
      }
      bins.AddRow(std::move(row));
    }
  }
  tables.emplace_back("prestige_bins.csv", std::move(bins));

  std::vector<std::string> cum_header = {"top_n"};
  for (const CumulativeCurve &c : r.cumulative) cum_header.push_back(c.group);
  CsvTable cumulative(cum_header);
  for (size_t i = 0; i < r.cut_points.size(); ++i) {
    std::vector<std::string> row = {Int(r.cut_points[i])};
    for (const CumulativeCurve &c : r.cumulative) {
      row.push_back(c.shares.empty() ? "" : FormatNumber(c.shares[i]));
    }
    cumulative.AddRow(std::move(row));
  }
  tables.emplace_back("cumulative_top_n.csv", std::move(cumulative));

  const SentenceLength &sl = r.sentence_length;
  CsvTable lengths({"n_man", "n_woman", "mean_man", "mean_woman", "t", "df", "p_two_sided",
                    "undefined"});
  lengths.AddRow({Int(sl.n_man), Int(sl.n_woman), FormatNumber(sl.mean_man),
                  FormatNumber(sl.mean_woman), sl.welch ? FormatNumber(sl.welch->t) : "",
                  sl.welch ? FormatNumber(sl.welch->df) : "",
                  sl.welch ? FormatNumber(sl.welch->p_two_sided) : "", sl.undefined_reason});
  tables.emplace_back("sentence_length.csv", std::move(lengths));

  const CoMention &cm = r.co_mention;
  CsvTable co({"sentences", "man_sentences", "woman_sentences", "mixed_sentences",
               "man_given_woman", "woman_given_man"});
  co.AddRow({Int(cm.sentences), Int(cm.man_sentences), Int(cm.woman_sentences),
             Int(cm.mixed_sentences), FormatNumber(cm.man_given_woman),
             FormatNumber(cm.woman_given_man)});
  tables.emplace_back("co_mention.csv", std::move(co));

  CsvTable prov({"detectors", "mentions"});
  for (const auto &[label, n] : r.provenance.by_label) prov.AddRow({label, Int(n)});
  tables.emplace_back("provenance.csv", std::move(prov));

  return tables;
}

std::vector<std::pair<std::string, std::string>> ReportFigures(const AuditReport &r) {
  return {
      {"gender_pies.svg", GenderPies(r)},
      {"gender_by_org_type.svg", GenderByOrgType(r)},
      {"org_type_by_outlet.svg", OrgTypeByOutlet(r)},
      {"gender_ratio_by_outlet.svg", OutletRatios(r)},
      {"prestige_rank_mentions.svg",
       RankScatter(r.institutions, "Mentions by world rank (log-log)", "world rank", true)},
      {"public_health_rank_mentions.svg",
       RankScatter(r.public_health_institutions, "Mentions by public-health rank",
                   "public-health rank", false)},
      {"prestige_bins.svg", PrestigeBins(r)},
      {"cumulative_top_n.svg", CumulativeCurves(r)},
  };
}

std::vector<std::string> EmitReport(const AuditReport &report,
                                    const std::vector<OutputFormat> &formats,
                                    const std::string &out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) {
    throw std::runtime_error("cannot create output directory " + out_dir);
  }
  std::vector<std::string> written;
  for (OutputFormat f : formats) {
    switch (f) {
      case OutputFormat::kJson: {
        fs::path p = fs::path(out_dir) / "report.json";
        WriteFile(p, ReportToJson(report));
        written.push_back(p.string());
        break;
      }
      case OutputFormat::kCsv:
        for (const auto &[name, table] : ReportTables(report)) {
          fs::path p = fs::path(out_dir) / name;
          WriteFile(p, table.Render());
          written.push_back(p.string());
        }
        break;
      case OutputFormat::kSvg:
        for (const auto &[name, content] : ReportFigures(report)) {
          fs::path p = fs::path(out_dir) / name;
          WriteFile(p, content);
          written.push_back(p.string());
        }
        break;
    }
  }
  return written;
}

CsvTable SampleForLabeling(const std::vector<ExpertMention> &mentions, size_t n,
                           uint64_t seed) {
  std::vector<std::string> ids;
  for (const ExpertMention &m : mentions) ids.push_back(m.article_id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (n > ids.size()) {
    throw std::invalid_argument("cannot sample " + std::to_string(n) + " articles from " +
                                std::to_string(ids.size()));
  }
  // Partial Fisher-Yates over the sorted ids.
  stats::SplitMix64 rng(seed);
  for (size_t i = 0; i < n; ++i) {
    size_t j = i + static_cast<size_t>(rng.Below(ids.size() - i));
    std::swap(ids[i], ids[j]);
  }
  std::set<std::string> chosen(ids.begin(), ids.begin() + static_cast<ptrdiff_t>(n));

  std::vector<const ExpertMention *> rows;
  for (const ExpertMention &m : mentions) {
    if (chosen.count(m.article_id)) rows.push_back(&m);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ExpertMention *a, const ExpertMention *b) {
    return std::tie(a->article_id, a->sentence_index) < std::tie(b->article_id, b->sentence_index);
  });
  CsvTable sheet({"article_id", "source", "sentence_index", "sentence", "speaker", "org",
                  "detectors", "verdict"});
  for (const ExpertMention *m : rows) {
    sheet.AddRow({m->article_id, m->source, Int(m->sentence_index), m->sentence_text,
                  m->speaker, m->org, m->detectors.Label(), ""});
  }
  return sheet;
}

}  // namespace expertaudit
