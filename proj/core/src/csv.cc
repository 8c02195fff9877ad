// Copyright 2026 The nocomments Authors
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

#include "nocomments/csv.h"

#include <fstream>
#include <sstream>

#include "nocomments/error.h"

namespace nocomments::csv {
namespace {

struct ParsedRows {
  std::vector<Row> rows;
  std::vector<std::size_t> lines;
};

ParsedRows parse_rows(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  ParsedRows out;
  Row row;
  std::string field;
  bool in_quotes = false;
  bool quoted_field = false;
  std::size_t line = 1;
  std::size_t row_line = 1;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    quoted_field = false;
  };
  auto end_row = [&] {
    end_field();
    const bool blank = row.size() == 1 && row[0].empty();
    if (!blank) {
      out.rows.push_back(std::move(row));
      out.lines.push_back(row_line);
    }
    row.clear();
    row_line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') ++line;
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field.empty() && !quoted_field) {
          in_quotes = true;
          quoted_field = true;
        } else {
          field.push_back(c);
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') {
          ++i;
          ++line;
        }
        end_row();
        break;
      case '\n':
        end_row();
        break;
      default:
        field.push_back(c);
    }
  }
  if (in_quotes) {
    throw Error("csv: unterminated quoted field starting on line " +
                std::to_string(row_line));
  }
  if (!field.empty() || !row.empty() || quoted_field) end_row();
  return out;
}

}  // namespace

std::vector<Row> parse(std::string_view text) {
  return parse_rows(text).rows;
}

Table parse_table(std::string_view text, std::string_view source_name) {
  ParsedRows parsed = parse_rows(text);
  if (parsed.rows.empty()) {
    throw Error(std::string(source_name) + ": missing header row");
  }
  Table table;
  table.header = std::move(parsed.rows.front());
  for (std::size_t i = 1; i < parsed.rows.size(); ++i) {
    if (parsed.rows[i].size() != table.header.size()) {
      std::ostringstream msg;
      msg << source_name << ":" << parsed.lines[i] << ": expected "
          << table.header.size() << " fields, found " << parsed.rows[i].size();
      throw Error(msg.str());
    }
    table.rows.push_back(std::move(parsed.rows[i]));
    table.line_numbers.push_back(parsed.lines[i]);
  }
  return table;
}

Table read_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table(buffer.str(), path.string());
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void append_row(std::string& out, const std::vector<std::string_view>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += escape(fields[i]);
  }
  out.push_back('\n');
}

}  // namespace nocomments::csv
