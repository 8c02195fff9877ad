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

#ifndef NOCOMMENTS_CSV_H_
#define NOCOMMENTS_CSV_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nocomments::csv {

using Row = std::vector<std::string>;

struct Table {
  Row header;
  std::vector<Row> rows;
  // 1-based line number of each row's first line in the source text.
  std::vector<std::size_t> line_numbers;
};

// RFC 4180 reader: double-quote quoting, doubled quotes as escapes, CRLF or LF
// line endings, embedded newlines inside quoted fields. A leading UTF-8 BOM is
// skipped. Blank lines are dropped. Throws nocomments::Error on an
// unterminated quoted field.
std::vector<Row> parse(std::string_view text);

// parse() plus header split. Every row must have exactly header.size() fields.
Table parse_table(std::string_view text, std::string_view source_name);

Table read_table(const std::filesystem::path& path);

// Quotes a field only when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

void append_row(std::string& out, const std::vector<std::string_view>& fields);

}  // namespace nocomments::csv

#endif  // NOCOMMENTS_CSV_H_
