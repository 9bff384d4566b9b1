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

#include "featforge/csv.h"

#include <fstream>
#include <sstream>

#include "featforge/errors.h"

namespace featforge {
namespace {

std::string QuoteIfNeeded(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::vector<std::vector<std::string>> ParseCsvRecords(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  size_t i = 0;
  // UTF-8 byte order mark.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;

  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    records.push_back(std::move(record));
    record.clear();
    field_started = false;
  };

  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        end_record();
        break;
      case '\n':
        end_record();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) throw DataError("csv: unterminated quoted field");
  if (field_started || !record.empty()) end_record();
  return records;
}

Table ParseCsv(std::string_view text, const Schema& schema, std::string name) {
  auto records = ParseCsvRecords(text);
  if (records.empty()) throw DataError("csv '" + name + "': missing header row");
  const std::vector<std::string>& header = records.front();

  std::vector<ColumnKind> kinds;
  for (const std::string& col : header) {
    auto it = schema.find(col);
    if (it == schema.end()) {
      throw DataError("csv '" + name + "': header column '" + col +
                      "' has no kind in the schema");
    }
    kinds.push_back(it->second);
  }
  for (const auto& [col, kind] : schema) {
    bool present = false;
    for (const std::string& h : header) present = present || h == col;
    if (!present) {
      throw DataError("csv '" + name + "': schema column '" + col +
                      "' missing from header");
    }
  }

  const size_t width = header.size();
  std::vector<std::vector<Value>> cells(width);
  for (auto& c : cells) c.reserve(records.size() - 1);
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    // Tolerate blank trailing lines.
    if (rec.size() == 1 && rec[0].empty() && width != 1) continue;
    if (rec.size() != width) {
      throw DataError("csv '" + name + "': row " + std::to_string(r) + " has " +
                      std::to_string(rec.size()) + " fields, expected " +
                      std::to_string(width));
    }
    for (size_t c = 0; c < width; ++c) {
      auto v = ParseValue(rec[c], kinds[c]);
      if (!v) {
        throw DataError("csv '" + name + "': cannot parse row " +
                        std::to_string(r) + ", column \"" + header[c] +
                        "\" as " + std::string(KindName(kinds[c])) + ": '" +
                        rec[c] + "'");
      }
      cells[c].push_back(std::move(*v));
    }
  }

  std::vector<Column> columns;
  columns.reserve(width);
  for (size_t c = 0; c < width; ++c) {
    columns.emplace_back(header[c], kinds[c], std::move(cells[c]));
  }
  try {
    return Table(std::move(name), std::move(columns));
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
}

Table LoadCsv(const std::filesystem::path& path, const Schema& schema,
              std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseCsv(buf.str(), schema, std::move(name));
}

std::string FormatCsv(const Table& table) {
  std::string out;
  for (size_t c = 0; c < table.column_count(); ++c) {
    if (c) out += ',';
    out += QuoteIfNeeded(table.column(c).name());
  }
  out += '\n';
  for (size_t r = 0; r < table.row_count(); ++r) {
    for (size_t c = 0; c < table.column_count(); ++c) {
      if (c) out += ',';
      out += QuoteIfNeeded(FormatValue(table.column(c).Cell(r)));
    }
    out += '\n';
  }
  return out;
}

void WriteCsv(const Table& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << FormatCsv(table);
  if (!out) throw DataError("write failed for '" + path.string() + "'");
}

}  // namespace featforge
