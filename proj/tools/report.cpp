// Copyright 2026 The rosetta-sim Authors
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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace rosetta::cli {
namespace {

std::string csv_cell(const Cell& cell) {
  if (const double* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const long long* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  const std::string& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  if (const double* d = std::get_if<double>(&cell)) return json_number(*d);
  if (const long long* i = std::get_if<long long>(&cell)) return *i;
  return std::get<std::string>(cell);
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

nlohmann::ordered_json json_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::strtod(format_number(value).c_str(), nullptr);
}

void write_csv(const Report& report, std::ostream& out) {
  for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << report.columns[i];
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
  for (const auto& [key, value] : report.summary) out << "# " << key << '=' << csv_cell(value) << '\n';
}

void write_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = report.command;
  for (const auto& [key, value] : report.summary) doc[key] = json_cell(value);
  if (report.flat && report.rows.size() == 1) {
    const auto& row = report.rows.front();
    for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i) doc[report.columns[i]] = json_cell(row[i]);
    for (const auto& [key, value] : report.extra.items()) doc[key] = value;
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : report.extra.items()) doc[key] = value;
  doc["columns"] = report.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i) obj[report.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write_report(const Report& report, Format format, std::ostream& out) {
  if (format == Format::kJson) {
    write_json(report, out);
  } else {
    write_csv(report, out);
  }
}

}  // namespace rosetta::cli
