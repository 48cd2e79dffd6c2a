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

// Python bindings. Results cross the boundary as plain dicts, lists and
// JSON strings; the package wrapper decodes the JSON.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "expertaudit/corpus.h"
#include "expertaudit/emit.h"
#include "expertaudit/orglink.h"
#include "expertaudit/pipeline.h"
#include "expertaudit/report.h"
#include "expertaudit/stats.h"

namespace py = pybind11;

namespace expertaudit {
namespace {

py::dict WelchToDict(const stats::WelchResult &r) {
  py::dict d;
  d["t"] = r.t;
  d["df"] = r.df;
  d["p"] = r.p_two_sided;
  d["mean_a"] = r.mean_a;
  d["mean_b"] = r.mean_b;
  return d;
}

py::dict BootstrapToDict(const stats::BootstrapResult &r) {
  py::dict d;
  d["mean"] = r.mean;
  d["std"] = r.std;
  d["ci_low"] = r.ci_low;
  d["ci_high"] = r.ci_high;
  d["n"] = r.n;
  d["iterations"] = r.iterations;
  d["valid_iterations"] = r.valid_iterations;
  return d;
}

// Collects warnings for the caller instead of printing them.
WarningSink Collect(std::vector<std::string> *out) {
  return [out](const std::string &w) { out->push_back(w); };
}

AuditConfig MakeConfig(const std::string &corpus, const std::string &data_dir,
                       bool suppress_outlet, int threads) {
  AuditConfig c;
  c.corpus_path = corpus;
  c.sources_path = data_dir + "/sources.json";
  c.gazetteer_dir = data_dir + "/gazetteers";
  c.lexicon_dir = data_dir + "/lexicons";
  c.extract.suppress_outlet = suppress_outlet;
  c.extract.threads = threads;
  return c;
}

}  // namespace
}  // namespace expertaudit

PYBIND11_MODULE(_core, m) {
  using namespace expertaudit;
  m.doc() = "Corpus audit of expert quotations in news articles";

  m.def("gini", [](const std::vector<double> &v) { return stats::Gini(v); }, py::arg("values"));
  m.def(
      "spearman",
      [](const std::vector<double> &x, const std::vector<double> &y) {
        stats::CorrelationTest r = stats::SpearmanTest(x, y);
        return py::make_tuple(r.rho, r.p_two_sided);
      },
      py::arg("x"), py::arg("y"), "Returns (rho, two-sided p).");
  m.def(
      "kruskal_wallis",
      [](const std::vector<std::vector<double>> &groups) {
        stats::KruskalWallisResult r = stats::KruskalWallis(groups);
        return py::make_tuple(r.h, r.p, r.df);
      },
      py::arg("groups"), "Returns (H, p, df).");
  m.def(
      "welch_t",
      [](const std::vector<double> &a, const std::vector<double> &b) {
        return WelchToDict(stats::WelchT(a, b));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "gender_ratio",
      [](int64_t men, int64_t women) { return stats::GenderRatio({men, women}); },
      py::arg("men"), py::arg("women"));
  m.def(
      "bootstrap",
      [](const std::vector<double> &data,
         const std::function<double(const std::vector<double> &)> &statistic, int iterations,
         uint64_t seed, double confidence) {
        stats::BootstrapConfig config;
        config.iterations = iterations;
        config.seed = seed;
        config.confidence = confidence;
        auto wrapped = [&](std::span<const double> s) {
          return statistic(std::vector<double>(s.begin(), s.end()));
        };
        return BootstrapToDict(stats::Bootstrap(data, wrapped, config));
      },
      py::arg("data"), py::arg("statistic"), py::arg("iterations") = 1000, py::arg("seed") = 0,
      py::arg("confidence") = 0.95);

  m.def("token_set_similarity",
        py::overload_cast<std::string_view, std::string_view>(&TokenSetSimilarity),
        py::arg("a"), py::arg("b"));
  m.def("levenshtein", &LevenshteinDistance, py::arg("a"), py::arg("b"));
  m.def(
      "segment",
      [](const std::string &body) {
        std::vector<std::string> out;
        for (const Sentence &s : SegmentSentences(body)) out.push_back(s.text);
        return out;
      },
      py::arg("body"));

  m.def(
      "extract_jsonl",
      [](const std::string &corpus, const std::string &data_dir, bool suppress_outlet,
         int threads) {
        std::vector<std::string> warnings;
        std::vector<std::string> lines;
        {
          py::gil_scoped_release release;
          AuditConfig c = MakeConfig(corpus, data_dir, suppress_outlet, threads);
          auto res = PipelineResources::Load(c.lexicon_dir, c.gazetteer_dir, c.sources_path,
                                             Collect(&warnings));
          ExtractOptions options;
          options.suppress_outlet = suppress_outlet;
          options.threads = threads;
          std::vector<Article> articles = ReadArticles(corpus, nullptr, Collect(&warnings));
          for (const ExpertMention &mention :
               Extractor(*res, options).ExtractAll(articles, nullptr, Collect(&warnings))) {
            lines.push_back(MentionToJsonLine(mention));
          }
        }
        return py::make_tuple(lines, warnings);
      },
      py::arg("corpus"), py::arg("data_dir"), py::arg("suppress_outlet") = true,
      py::arg("threads") = 1, "Returns (mention JSON lines, warnings).");

  m.def(
      "audit_json",
      [](const std::string &corpus, const std::string &data_dir, std::optional<std::string> out,
         const std::string &formats, uint64_t seed, int bootstrap, int bin_width,
         bool suppress_outlet, bool majority_gender, int threads) {
        std::vector<std::string> warnings;
        std::string report_json;
        {
          py::gil_scoped_release release;
          AuditConfig c = MakeConfig(corpus, data_dir, suppress_outlet, threads);
          c.report.seed = seed;
          c.report.bootstrap_iterations = bootstrap;
          c.report.bin_width = bin_width;
          if (majority_gender) c.report.unique_gender = GenderPolicy::kMajority;
          AuditResult result = RunAudit(c, Collect(&warnings));
          if (out) {
            EmitReport(result.report, ParseFormats(formats), *out);
            WriteMentionsJsonl(result.mentions, *out + "/mentions.jsonl");
          }
          report_json = ReportToJson(result.report);
        }
        return py::make_tuple(report_json, warnings);
      },
      py::arg("corpus"), py::arg("data_dir"), py::arg("out") = py::none(),
      py::arg("formats") = "json,csv,svg", py::arg("seed") = 0, py::arg("bootstrap") = 1000,
      py::arg("bin_width") = 50, py::arg("suppress_outlet") = true,
      py::arg("majority_gender") = false, py::arg("threads") = 1,
      "Returns (report JSON, warnings).");
}
