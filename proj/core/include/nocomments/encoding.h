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

#ifndef NOCOMMENTS_ENCODING_H_
#define NOCOMMENTS_ENCODING_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "nocomments/pattern.h"

namespace nocomments {

class SiteRegistry;

// One row of the encoding file: how to find one site's comment sections
// (rough slicing) and the fields of each comment (precise slicing). Absent
// optionals are the cells written as "False".
struct EncodingRule {
  std::string site_id;
  std::string label;

  bool has_comments = false;
  std::optional<Pattern> open_pattern;
  std::optional<Pattern> close_pattern;

  // Byte length of a comment section holding zero comments.
  std::optional<std::size_t> empty_size;
  std::optional<Pattern> comment_pattern;
  std::optional<Pattern> date_pattern;
  std::optional<Pattern> author_pattern;
  std::optional<Pattern> depth_pattern;
  std::optional<Pattern> author_url_pattern;
  std::optional<Pattern> text_pattern;

  bool supports_precise() const { return comment_pattern.has_value(); }

  friend bool operator==(const EncodingRule&, const EncodingRule&) = default;
};

// Throws Error if has_comments is set without an opening pattern, or if the
// site_id is empty.
void validate_rule(const EncodingRule& rule);

class EncodingFile {
 public:
  // Validates the rule; throws Error on a duplicate site_id.
  void add(EncodingRule rule);

  const EncodingRule* find(std::string_view site_id) const;
  const std::map<std::string, EncodingRule, std::less<>>& rules() const {
    return rules_;
  }
  std::size_t size() const { return rules_.size(); }

  friend bool operator==(const EncodingFile&, const EncodingFile&) = default;

 private:
  std::map<std::string, EncodingRule, std::less<>> rules_;
};

inline constexpr std::string_view kEncodingHeader =
    "site_id,label,has_comments,open_pattern,close_pattern,empty_size,"
    "comment_pattern,date_pattern,author_pattern,depth_pattern,"
    "author_url_pattern,text_pattern";

// Parses encoding-file CSV. The header must equal kEncodingHeader. Errors
// (duplicate site, bad boolean/size, missing opening, regex that does not
// compile) throw Error with the source name and row number.
EncodingFile parse_encoding(std::string_view text,
                            std::string_view source_name = "<encoding>");
EncodingFile parse_encoding_file(const std::filesystem::path& path);

// Inverse of parse_encoding for every rule whose literals are not the bare
// word "False" and do not start with "re:".
std::string write_encoding(const EncodingFile& file);

// Throws Error naming the first registry site that has no rule.
void require_rules_for(const EncodingFile& file, const SiteRegistry& registry);

}  // namespace nocomments

#endif  // NOCOMMENTS_ENCODING_H_
