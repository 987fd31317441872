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

#include "groverlab/report.h"

#include <fmt/format.h>

#include <cmath>
#include <fstream>

#include "groverlab/errors.h"
#include "json.hpp"

#ifndef GROVERLAB_VERSION
#define GROVERLAB_VERSION "0.0.0"
#endif

namespace groverlab {

namespace {

std::string json_string(std::string_view s) {
    return nlohmann::json(std::string(s)).dump();
}

std::string format_double(double v) {
    return fmt::format("{:.17g}", v);
}

std::string json_value(const ReportValue &value) {
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return fmt::format("{}", v);
            } else if constexpr (std::is_same_v<T, double>) {
                return std::isfinite(v) ? format_double(v) : "null";
            } else {
                return json_string(v);
            }
        },
        value);
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_value(const ReportValue &value) {
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return fmt::format("{}", v);
            } else if constexpr (std::is_same_v<T, double>) {
                return std::isfinite(v) ? format_double(v) : "";
            } else {
                return csv_field(v);
            }
        },
        value);
}

void json_object(std::string &out, std::string_view key, const std::vector<std::pair<std::string, ReportValue>> &items,
                 bool trailing_comma) {
    out += fmt::format("  {}: {{", json_string(key));
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += fmt::format("{}\n    {}: {}", i ? "," : "", json_string(items[i].first), json_value(items[i].second));
    }
    out += items.empty() ? "}" : "\n  }";
    out += trailing_comma ? ",\n" : "\n";
}

std::string emit_json(const ExperimentReport &report) {
    std::string out = "{\n";
    out += fmt::format("  \"tool\": \"groverlab\",\n");
    out += fmt::format("  \"version\": {},\n", json_string(tool_version()));
    out += fmt::format("  \"command\": {},\n", json_string(report.command));
    out += fmt::format("  \"seed\": {},\n", report.seed);
    out += fmt::format("  \"ok\": {},\n", report.ok() ? "true" : "false");
    json_object(out, "parameters", report.parameters, true);
    json_object(out, "results", report.results, true);

    std::vector<std::pair<std::string, ReportValue>> verdicts;
    for (const auto &[name, holds] : report.verdicts) {
        verdicts.emplace_back(name, holds);
    }
    json_object(out, "verdicts", verdicts, true);

    out += "  \"warnings\": [";
    for (std::size_t i = 0; i < report.warnings.size(); ++i) {
        out += fmt::format("{}{}", i ? ", " : "", json_string(report.warnings[i]));
    }
    out += "],\n";

    out += "  \"tables\": [";
    for (std::size_t t = 0; t < report.tables.size(); ++t) {
        const auto &table = report.tables[t];
        out += fmt::format("{}\n    {{\n      \"name\": {},\n      \"columns\": [", t ? "," : "",
                           json_string(table.name));
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out += fmt::format("{}{}", c ? ", " : "", json_string(table.columns[c]));
        }
        out += "],\n      \"rows\": [";
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            out += fmt::format("{}\n        [", r ? "," : "");
            for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
                out += fmt::format("{}{}", c ? ", " : "", json_value(table.rows[r][c]));
            }
            out += "]";
        }
        out += table.rows.empty() ? "]\n    }" : "\n      ]\n    }";
    }
    out += report.tables.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

std::string emit_csv(const ExperimentReport &report) {
    std::string out(kCsvHeader);
    out += "\n";
    auto scalar = [&out](std::string_view section, std::string_view name, const std::string &value) {
        out += fmt::format("{},{},,,{}\n", section, csv_field(name), value);
    };
    scalar("meta", "tool", "groverlab");
    scalar("meta", "version", csv_field(tool_version()));
    scalar("meta", "command", csv_field(report.command));
    scalar("meta", "seed", fmt::format("{}", report.seed));
    scalar("meta", "ok", report.ok() ? "true" : "false");
    for (const auto &[name, value] : report.parameters) {
        scalar("parameter", name, csv_value(value));
    }
    for (const auto &[name, value] : report.results) {
        scalar("result", name, csv_value(value));
    }
    for (const auto &[name, holds] : report.verdicts) {
        scalar("verdict", name, holds ? "true" : "false");
    }
    for (std::size_t i = 0; i < report.warnings.size(); ++i) {
        scalar("warning", fmt::format("{}", i), csv_field(report.warnings[i]));
    }
    for (const auto &table : report.tables) {
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            for (std::size_t c = 0; c < table.rows[r].size() && c < table.columns.size(); ++c) {
                out += fmt::format("table,{},{},{},{}\n", csv_field(table.name), r, csv_field(table.columns[c]),
                                   csv_value(table.rows[r][c]));
            }
        }
    }
    return out;
}

}  // namespace

bool ExperimentReport::ok() const {
    for (const auto &[name, holds] : verdicts) {
        if (!holds) {
            return false;
        }
    }
    return true;
}

std::string_view tool_version() {
    return GROVERLAB_VERSION;
}

std::string emit_report(const ExperimentReport &report, ReportFormat format) {
    return format == ReportFormat::kJson ? emit_json(report) : emit_csv(report);
}

void write_report(const ExperimentReport &report, ReportFormat format, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << emit_report(report, format);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

}  // namespace groverlab
