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

// Writing reports to disk (JSON, RFC 4180 CSV tables, SVG 1.1 figures) and
// drawing article samples for manual precision labeling.

#ifndef EXPERTAUDIT_EMIT_H_
#define EXPERTAUDIT_EMIT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expertaudit/report.h"

namespace expertaudit {

enum class OutputFormat { kJson, kCsv, kSvg };

// Parses "json,csv,svg" style lists. Throws std::invalid_argument.
std::vector<OutputFormat> ParseFormats(std::string_view list);

// A CSV table; Render() quotes fields as RFC 4180 requires and ends every
// record with CRLF.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void AddRow(std::vector<std::string> row);
  size_t rows() const { return rows_.size(); }
  std::string Render() const;

  static std::string Quote(std::string_view field);

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Shortest round-trip decimal, or empty for missing / non-finite values.
std::string FormatNumber(std::optional<double> value);

// Named CSV tables and SVG figures derived from the report.
std::vector<std::pair<std::string, CsvTable>> ReportTables(const AuditReport &report);
std::vector<std::pair<std::string, std::string>> ReportFigures(
    const AuditReport &report);

// Writes the requested formats into `out_dir` (created if needed) and
// returns the written paths in order. Throws std::runtime_error when the
// directory or a file cannot be written.
std::vector<std::string> EmitReport(const AuditReport &report,
                                    const std::vector<OutputFormat> &formats,
                                    const std::string &out_dir);

// Uniform sample of `n` distinct articles (seeded) among those with at least
// one mention; one row per mention of the sampled articles with an empty
// verdict column. Throws std::invalid_argument when n exceeds the number of
// articles available.
CsvTable SampleForLabeling(const std::vector<ExpertMention> &mentions, size_t n,
                           uint64_t seed);

}  // namespace expertaudit

#endif  // EXPERTAUDIT_EMIT_H_
