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

#pragma once

// Tabular/keyed results of one CLI command and their CSV/JSON renderings.

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace rosetta::cli {

using Cell = std::variant<double, long long, std::string>;

enum class Format { kCsv, kJson };

struct Report {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Scalars printed as `# key=value` after the CSV body and as top-level
  // JSON fields.
  std::vector<std::pair<std::string, Cell>> summary;
  // Single-row reports may render their row as top-level JSON fields.
  bool flat = false;
  // Extra structured JSON fields (ignored by CSV).
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

inline constexpr const char* kSchemaVersion = "1";

/// %.12g; non-finite values print as nan, inf, -inf.
std::string format_number(double value);

/// Rounds to 12 significant digits so JSON output matches the CSV digits.
/// Non-finite values become null.
nlohmann::ordered_json json_number(double value);

void write_csv(const Report& report, std::ostream& out);
void write_json(const Report& report, std::ostream& out);
void write_report(const Report& report, Format format, std::ostream& out);

}  // namespace rosetta::cli
