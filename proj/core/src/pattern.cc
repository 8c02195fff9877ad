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

#include "nocomments/pattern.h"

#include <utility>

#include "nocomments/error.h"

namespace nocomments {
namespace {

constexpr std::string_view kRegexPrefix = "re:";
constexpr std::string_view kHole = "{}";

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const std::size_t first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const std::size_t last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::optional<std::string> non_empty(std::string_view value) {
  value = trim(value);
  if (value.empty()) return std::nullopt;
  return std::string(value);
}

std::string_view up_to_tag(std::string_view s) {
  return s.substr(0, s.find('<'));
}

}  // namespace

Pattern::Pattern(PatternKind kind, std::string source)
    : kind_(kind), source_(std::move(source)) {}

Pattern Pattern::literal(std::string text) {
  if (text.empty()) throw Error("empty literal pattern");
  return Pattern(PatternKind::kLiteral, std::move(text));
}

Pattern Pattern::regex(std::string expression) {
  if (expression.empty()) throw Error("empty regex pattern");
  Pattern pattern(PatternKind::kRegex, std::move(expression));
  try {
    pattern.compiled_ = std::make_shared<const std::regex>(
        pattern.source_, std::regex::ECMAScript | std::regex::optimize);
  } catch (const std::regex_error& e) {
    throw Error("regex '" + pattern.source_ + "' does not compile: " +
                e.what());
  }
  return pattern;
}

Pattern Pattern::from_cell(std::string_view cell) {
  if (cell.starts_with(kRegexPrefix)) {
    return regex(std::string(cell.substr(kRegexPrefix.size())));
  }
  return literal(std::string(cell));
}

std::string Pattern::to_cell() const {
  if (kind_ == PatternKind::kRegex) {
    return std::string(kRegexPrefix) + source_;
  }
  return source_;
}

std::optional<Match> Pattern::find(std::string_view haystack,
                                   std::size_t from) const {
  if (from > haystack.size()) return std::nullopt;
  if (kind_ == PatternKind::kLiteral) {
    const std::size_t at = haystack.find(source_, from);
    if (at == std::string_view::npos) return std::nullopt;
    return Match{at, at + source_.size()};
  }
  std::cmatch m;
  const auto flags = from > 0 ? std::regex_constants::match_prev_avail
                              : std::regex_constants::match_default;
  const char* first = haystack.data() + from;
  const char* last = haystack.data() + haystack.size();
  if (!std::regex_search(first, last, m, *compiled_, flags)) {
    return std::nullopt;
  }
  const std::size_t start = from + static_cast<std::size_t>(m.position(0));
  return Match{start, start + static_cast<std::size_t>(m.length(0))};
}

std::vector<Match> Pattern::find_all(std::string_view haystack) const {
  std::vector<Match> out;
  std::size_t from = 0;
  while (auto m = find(haystack, from)) {
    out.push_back(*m);
    from = m->end > m->start ? m->end : m->end + 1;
  }
  return out;
}

std::optional<std::string> Pattern::extract(std::string_view fragment) const {
  if (kind_ == PatternKind::kRegex) {
    std::cmatch m;
    if (!std::regex_search(fragment.data(), fragment.data() + fragment.size(),
                           m, *compiled_)) {
      return std::nullopt;
    }
    const auto& group = (m.size() > 1 && m[1].matched) ? m[1] : m[0];
    return non_empty(std::string_view(group.first,
                                      static_cast<std::size_t>(group.length())));
  }

  const std::size_t hole = source_.find(kHole);
  if (hole == std::string::npos) {
    const std::size_t at = fragment.find(source_);
    if (at == std::string_view::npos) return std::nullopt;
    return non_empty(up_to_tag(fragment.substr(at + source_.size())));
  }

  const std::string_view before = std::string_view(source_).substr(0, hole);
  const std::string_view after =
      std::string_view(source_).substr(hole + kHole.size());
  std::size_t start = 0;
  if (!before.empty()) {
    const std::size_t at = fragment.find(before);
    if (at == std::string_view::npos) return std::nullopt;
    start = at + before.size();
  }
  const std::string_view rest = fragment.substr(start);
  if (after.empty()) return non_empty(up_to_tag(rest));
  const std::size_t stop = rest.find(after);
  if (stop == std::string_view::npos) return std::nullopt;
  return non_empty(rest.substr(0, stop));
}

}  // namespace nocomments
