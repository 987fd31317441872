// Copyright 2026 The groverlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GROVERLAB_REPORT_H
#define GROVERLAB_REPORT_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace groverlab {

using ReportValue = std::variant<bool, std::int64_t, double, std::string>;

struct ReportTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<ReportValue>> rows;
};

/// Everything a CLI run produces. Field order is insertion order and is kept
/// verbatim on output.
struct ExperimentReport {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, ReportValue>> parameters;
    std::vector<std::pair<std::string, ReportValue>> results;
    std::vector<ReportTable> tables;
    std::vector<std::pair<std::string, bool>> verdicts;
    std::vector<std::string> warnings;

    /// True when every verdict holds.
    bool ok() const;
};

enum class ReportFormat { kJson, kCsv };

/// Header row of the CSV form. Scalars leave `row` and `column` empty; table
/// cells carry their row number and column name.
inline constexpr std::string_view kCsvHeader = "section,name,row,column,value";

std::string_view tool_version();

/// Deterministic serialization: fixed key order, doubles with 17 significant
/// digits (non-finite values become null / empty), '\n' line endings.
std::string emit_report(const ExperimentReport &report, ReportFormat format);

/// IoError if `path` cannot be written.
void write_report(const ExperimentReport &report, ReportFormat format, const std::filesystem::path &path);

}  // namespace groverlab

#endif
