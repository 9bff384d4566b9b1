// Copyright 2026 The FeatForge Authors
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

#ifndef FEATFORGE_CSV_H_
#define FEATFORGE_CSV_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "featforge/table.h"

namespace featforge {

using Schema = std::map<std::string, ColumnKind, std::less<>>;

// Splits RFC-4180 text into records. Quoted fields may contain commas,
// doubled quotes and line breaks. Throws DataError on an unterminated quote.
std::vector<std::vector<std::string>> ParseCsvRecords(std::string_view text);

// Builds a typed table from CSV text with a mandatory header row. Every
// header column must have a kind in `schema`; empty cells become Null.
// Unparseable cells raise DataError naming the 1-based data row, the column
// and the raw text.
Table ParseCsv(std::string_view text, const Schema& schema, std::string name);
Table LoadCsv(const std::filesystem::path& path, const Schema& schema,
              std::string name);

std::string FormatCsv(const Table& table);
void WriteCsv(const Table& table, const std::filesystem::path& path);

}  // namespace featforge

#endif  // FEATFORGE_CSV_H_
