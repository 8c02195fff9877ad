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

#include "nocomments/encoding.h"

#include <charconv>
#include <utility>
#include <vector>

#include "nocomments/corpus.h"
#include "nocomments/csv.h"
#include "nocomments/error.h"
#include "nocomments/outputs.h"

namespace nocomments {
namespace {

constexpr std::string_view kAbsent = "False";

enum Column : std::size_t {
  kSiteId,
  kLabel,
  kHasComments,
  kOpen,
  kClose,
  kEmptySize,
  kComment,
  kDate,
  kAuthor,
  kDepth,
  kAuthorUrl,
  kText,
  kColumnCount,
};

std::vector<std::string> expected_header() {
  std::vector<std::string> out = csv::parse(kEncodingHeader).front();
  return out;
}

bool is_absent(std::string_view cell) {
  return cell.empty() || cell == kAbsent;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::optional<bool> parse_bool(std::string_view cell) {
  const std::string v = lower(cell);
  if (v == "true" || v == "t" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "f" || v == "0" || v == "no") return false;
  return std::nullopt;
}

std::optional<Pattern> parse_pattern(std::string_view cell) {
  if (is_absent(cell)) return std::nullopt;
  return Pattern::from_cell(cell);
}

std::string pattern_cell(const std::optional<Pattern>& p) {
  return p ? p->to_cell() : std::string(kAbsent);
}

}  // namespace

void validate_rule(const EncodingRule& rule) {
  if (rule.site_id.empty()) throw Error("encoding rule with empty site_id");
  if (rule.has_comments && !rule.open_pattern) {
    throw Error("site '" + rule.site_id +
                "': has_comments is true but open_pattern is empty");
  }
}

void EncodingFile::add(EncodingRule rule) {
  validate_rule(rule);
  if (rules_.contains(rule.site_id)) {
    throw Error("duplicate encoding rule for site '" + rule.site_id + "'");
  }
  std::string key = rule.site_id;
  rules_.emplace(std::move(key), std::move(rule));
}

const EncodingRule* EncodingFile::find(std::string_view site_id) const {
  auto it = rules_.find(site_id);
  return it == rules_.end() ? nullptr : &it->second;
}

EncodingFile parse_encoding(std::string_view text,
                            std::string_view source_name) {
  const csv::Table table = csv::parse_table(text, source_name);
  if (table.header != expected_header()) {
    throw Error(std::string(source_name) +
                ": header must be exactly: " + std::string(kEncodingHeader));
  }

  EncodingFile file;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const csv::Row& row = table.rows[i];
    const std::string where = std::string(source_name) + ": row " +
                              std::to_string(table.line_numbers[i]);
    try {
      EncodingRule rule;
      rule.site_id = row[kSiteId];
      rule.label = row[kLabel];

      const auto has_comments = parse_bool(row[kHasComments]);
      if (!has_comments) {
        throw Error("has_comments must be true or false, got '" +
                    row[kHasComments] + "'");
      }
      rule.has_comments = *has_comments;
      rule.open_pattern = parse_pattern(row[kOpen]);
      rule.close_pattern = parse_pattern(row[kClose]);

      if (!is_absent(row[kEmptySize])) {
        const std::string& cell = row[kEmptySize];
        std::size_t value = 0;
        const auto [end, ec] =
            std::from_chars(cell.data(), cell.data() + cell.size(), value);
        if (ec != std::errc() || end != cell.data() + cell.size()) {
          throw Error("empty_size must be a nonnegative integer or False, "
                      "got '" + cell + "'");
        }
        rule.empty_size = value;
      }
      rule.comment_pattern = parse_pattern(row[kComment]);
      rule.date_pattern = parse_pattern(row[kDate]);
      rule.author_pattern = parse_pattern(row[kAuthor]);
      rule.depth_pattern = parse_pattern(row[kDepth]);
      rule.author_url_pattern = parse_pattern(row[kAuthorUrl]);
      rule.text_pattern = parse_pattern(row[kText]);
      file.add(std::move(rule));
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
  }
  return file;
}

EncodingFile parse_encoding_file(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error("encoding file not found: " + path.string());
  }
  return parse_encoding(read_file(path), path.string());
}

std::string write_encoding(const EncodingFile& file) {
  std::string out(kEncodingHeader);
  out.push_back('\n');
  for (const auto& [id, rule] : file.rules()) {
    const std::string empty_size =
        rule.empty_size ? std::to_string(*rule.empty_size)
                        : std::string(kAbsent);
    const std::string cells[kColumnCount] = {
        rule.site_id,
        rule.label,
        rule.has_comments ? "True" : "False",
        pattern_cell(rule.open_pattern),
        pattern_cell(rule.close_pattern),
        empty_size,
        pattern_cell(rule.comment_pattern),
        pattern_cell(rule.date_pattern),
        pattern_cell(rule.author_pattern),
        pattern_cell(rule.depth_pattern),
        pattern_cell(rule.author_url_pattern),
        pattern_cell(rule.text_pattern),
    };
    csv::append_row(out, std::vector<std::string_view>(std::begin(cells),
                                                       std::end(cells)));
  }
  return out;
}

void require_rules_for(const EncodingFile& file, const SiteRegistry& registry) {
  for (const Site& site : registry.sites()) {
    if (!file.find(site.site_id)) {
      throw Error("no encoding rule for site '" + site.site_id + "'");
    }
  }
}

}  // namespace nocomments
