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

#ifndef NOCOMMENTS_PATTERN_H_
#define NOCOMMENTS_PATTERN_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace nocomments {

enum class PatternKind { kLiteral, kRegex };

// Half-open byte range [start, end) of a match inside the searched buffer.
struct Match {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Match&, const Match&) = default;
};

// A delimiter or field pattern from the encoding file. Literal patterns match
// as exact, case-sensitive byte substrings; regex patterns use ECMAScript
// syntax over raw bytes.
class Pattern {
 public:
  static Pattern literal(std::string text);
  // Throws Error if the expression does not compile.
  static Pattern regex(std::string expression);
  // Encoding-file cell syntax: "re:" prefix selects a regex, anything else is
  // a literal.
  static Pattern from_cell(std::string_view cell);

  PatternKind kind() const { return kind_; }
  const std::string& source() const { return source_; }
  std::string to_cell() const;

  // First match starting at or after offset 'from'. Empty regex matches are
  // reported; callers that loop must advance past them.
  std::optional<Match> find(std::string_view haystack,
                            std::size_t from = 0) const;

  // Non-overlapping matches in document order.
  std::vector<Match> find_all(std::string_view haystack) const;

  // Field value carried by the first match in 'fragment', whitespace-trimmed.
  // An empty value counts as no match.
  //   regex:                      capture group 1 if the expression has one,
  //                               otherwise the whole match.
  //   literal "pre{}post":        bytes between "pre" and the next "post"
  //                               ("{}" at the end: up to the next '<').
  //   literal without "{}":       bytes after the literal up to the next '<'.
  std::optional<std::string> extract(std::string_view fragment) const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.kind_ == b.kind_ && a.source_ == b.source_;
  }

 private:
  Pattern(PatternKind kind, std::string source);

  PatternKind kind_;
  std::string source_;
  std::shared_ptr<const std::regex> compiled_;
};

}  // namespace nocomments

#endif  // NOCOMMENTS_PATTERN_H_
