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

// Command-line front end.
//
//   expertaudit audit   --corpus articles.jsonl --out results/
//   expertaudit extract --corpus articles.jsonl --out results/
//   expertaudit stats   --mentions results/mentions.jsonl --out results/
//   expertaudit sample  --mentions results/mentions.jsonl -n 100 --out sheet.csv
//
// Exit status: 0 on success, 2 when no mentions were extracted, 1 on error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "expertaudit/emit.h"
#include "expertaudit/pipeline.h"
#include "expertaudit/report.h"

#ifndef EXPERTAUDIT_DATA_DIR
#define EXPERTAUDIT_DATA_DIR "data"
#endif

namespace {

namespace fs = std::filesystem;
using namespace expertaudit;

constexpr int kExitOk = 0;
constexpr int kExitFatal = 1;
constexpr int kExitEmpty = 2;

struct Options {
  std::string corpus;
  std::string mentions;
  std::string sources = std::string(EXPERTAUDIT_DATA_DIR) + "/sources.json";
  std::string gazetteers = std::string(EXPERTAUDIT_DATA_DIR) + "/gazetteers";
  std::string lexicons = std::string(EXPERTAUDIT_DATA_DIR) + "/lexicons";
  std::string out;
  std::string formats = "json,csv,svg";
  uint64_t seed = 0;
  int bootstrap = 1000;
  int bin_width = 50;
  int threads = 1;
  size_t sample_size = 100;
  bool no_outlet_suppression = false;
  bool paper_faithful = false;
  bool majority_gender = false;
  bool quiet = false;
  bool verbose = false;
};

// Collects warnings and prints them at exit, capped unless verbose.
class Warnings {
 public:
  WarningSink Sink() {
    return [this](const std::string &w) { items_.push_back(w); };
  }
  void Flush(bool verbose) {
    constexpr size_t kShown = 5;
    size_t shown = verbose ? items_.size() : std::min(kShown, items_.size());
    for (size_t i = 0; i < shown; ++i) std::cerr << "warning: " << items_[i] << "\n";
    if (shown < items_.size()) {
      std::cerr << "warning: " << items_.size() - shown
                << " more warnings (use --verbose to list)\n";
    }
    items_.clear();
  }

 private:
  std::vector<std::string> items_;
};

Warnings &GlobalWarnings() {
  static Warnings *w = new Warnings;
  return *w;
}

void AddResourceFlags(CLI::App *cmd, Options &o) {
  cmd->add_option("--sources", o.sources, "Outlet config (JSON)")->capture_default_str();
  cmd->add_option("--gazetteers", o.gazetteers, "Gazetteer directory")->capture_default_str();
  cmd->add_option("--lexicons", o.lexicons, "Word lists and dictionaries")
      ->capture_default_str();
}

void AddExtractFlags(CLI::App *cmd, Options &o) {
  cmd->add_option("--corpus", o.corpus, "Articles (JSONL)")->required();
  cmd->add_flag("--no-outlet-suppression", o.no_outlet_suppression,
                "Keep organizations naming the publishing outlet");
  cmd->add_flag("--paper-faithful", o.paper_faithful,
                "Reproduce the original extraction behavior (no outlet suppression)");
  cmd->add_option("--threads", o.threads, "Extraction workers")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
}

void AddReportFlags(CLI::App *cmd, Options &o) {
  cmd->add_option("--seed", o.seed, "Bootstrap seed")->capture_default_str();
  cmd->add_option("--bootstrap", o.bootstrap, "Bootstrap iterations B")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--bin-width", o.bin_width, "Rank bin width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--formats", o.formats, "Comma list of json, csv, svg")
      ->capture_default_str();
  cmd->add_flag("--majority-gender", o.majority_gender,
                "Unique experts take their majority gender, not the first");
}

ExtractOptions ToExtractOptions(const Options &o) {
  ExtractOptions e;
  e.suppress_outlet = !(o.no_outlet_suppression || o.paper_faithful);
  e.threads = o.threads;
  return e;
}

ReportOptions ToReportOptions(const Options &o) {
  ReportOptions r;
  r.seed = o.seed;
  r.bootstrap_iterations = o.bootstrap;
  r.bin_width = o.bin_width;
  r.unique_gender = o.majority_gender ? GenderPolicy::kMajority : GenderPolicy::kFirstMention;
  return r;
}

std::string MentionsPath(const Options &o) {
  return (fs::path(o.out) / "mentions.jsonl").string();
}

void EnsureDir(const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw std::runtime_error("cannot create " + dir);
}

int Finish(const Options &o, int64_t mentions) {
  if (mentions == 0) {
    std::cerr << "warning: no expert mentions extracted\n";
    return kExitEmpty;
  }
  if (!o.quiet) std::cerr << mentions << " expert mentions\n";
  return kExitOk;
}

void PrintExtractStats(const ReaderStats &reader, const ExtractStats &s) {
  std::cerr << "articles: " << reader.articles << " read, " << reader.skipped()
            << " skipped; sentences: " << s.sentences
            << "; detector hits: " << s.candidates << "\n";
}

int RunAuditCommand(const Options &o) {
  std::vector<OutputFormat> formats = ParseFormats(o.formats);
  AuditConfig config;
  config.corpus_path = o.corpus;
  config.sources_path = o.sources;
  config.gazetteer_dir = o.gazetteers;
  config.lexicon_dir = o.lexicons;
  config.extract = ToExtractOptions(o);
  config.report = ToReportOptions(o);
  AuditResult result = RunAudit(config, GlobalWarnings().Sink());
  if (o.paper_faithful) result.report.meta["mode"] = "paper_faithful";
  EnsureDir(o.out);
  WriteMentionsJsonl(result.mentions, MentionsPath(o));
  EmitReport(result.report, formats, o.out);
  if (!o.quiet) PrintExtractStats(result.reader, result.extract);
  return Finish(o, static_cast<int64_t>(result.mentions.size()));
}

int RunExtractCommand(const Options &o) {
  auto res = PipelineResources::Load(o.lexicons, o.gazetteers, o.sources,
                                     GlobalWarnings().Sink());
  ReaderStats reader;
  std::vector<Article> articles = ReadArticles(o.corpus, &reader, GlobalWarnings().Sink());
  Extractor extractor(*res, ToExtractOptions(o));
  ExtractStats stats;
  std::vector<ExpertMention> mentions =
      extractor.ExtractAll(articles, &stats, GlobalWarnings().Sink());
  EnsureDir(o.out);
  WriteMentionsJsonl(mentions, MentionsPath(o));
  if (!o.quiet) PrintExtractStats(reader, stats);
  return Finish(o, static_cast<int64_t>(mentions.size()));
}

int RunStatsCommand(const Options &o) {
  std::vector<OutputFormat> formats = ParseFormats(o.formats);
  std::vector<ExpertMention> mentions = ReadMentionsJsonl(o.mentions);
  SourceConfig sources = SourceConfig::Load(o.sources);
  Gazetteer gazetteer = Gazetteer::LoadDirectory(o.gazetteers, GlobalWarnings().Sink());
  AuditReport report = BuildReport(mentions, sources, gazetteer, ToReportOptions(o));
  EmitReport(report, formats, o.out);
  return Finish(o, static_cast<int64_t>(mentions.size()));
}

int RunSampleCommand(const Options &o) {
  std::vector<ExpertMention> mentions = ReadMentionsJsonl(o.mentions);
  CsvTable sheet = SampleForLabeling(mentions, o.sample_size, o.seed);
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + o.out);
  out << sheet.Render();
  if (!out) throw std::runtime_error("write failed: " + o.out);
  if (!o.quiet) std::cerr << sheet.rows() << " rows written to " << o.out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  Options o;
  CLI::App app{"Expert-source audit of news corpora"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("-q,--quiet", o.quiet, "Only print warnings and errors");
  app.add_flag("-v,--verbose", o.verbose, "List every input warning");

  CLI::App *audit = app.add_subcommand("audit", "Extract mentions and build the full report");
  AddExtractFlags(audit, o);
  AddResourceFlags(audit, o);
  AddReportFlags(audit, o);
  audit->add_option("--out", o.out, "Output directory")->required();

  CLI::App *extract = app.add_subcommand("extract", "Write mentions.jsonl only");
  AddExtractFlags(extract, o);
  AddResourceFlags(extract, o);
  extract->add_option("--out", o.out, "Output directory")->required();

  CLI::App *stats = app.add_subcommand("stats", "Build the report from mentions.jsonl");
  stats->add_option("--mentions", o.mentions, "Mentions file (JSONL)")->required();
  stats->add_option("--sources", o.sources, "Outlet config (JSON)")->capture_default_str();
  stats->add_option("--gazetteers", o.gazetteers, "Gazetteer directory")
      ->capture_default_str();
  AddReportFlags(stats, o);
  stats->add_option("--out", o.out, "Output directory")->required();

  CLI::App *sample = app.add_subcommand("sample", "Labeling sheet for precision checks");
  sample->add_option("--mentions", o.mentions, "Mentions file (JSONL)")->required();
  sample->add_option("-n,--articles", o.sample_size, "Articles to sample")
      ->capture_default_str();
  sample->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  sample->add_option("--out", o.out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitFatal;
  }

  int status = kExitFatal;
  try {
    if (audit->parsed()) status = RunAuditCommand(o);
    if (extract->parsed()) status = RunExtractCommand(o);
    if (stats->parsed()) status = RunStatsCommand(o);
    if (sample->parsed()) status = RunSampleCommand(o);
  } catch (const std::exception &e) {
    GlobalWarnings().Flush(o.verbose);
    std::cerr << "error: " << e.what() << "\n";
    return kExitFatal;
  }
  GlobalWarnings().Flush(o.verbose);
  return status;
}
