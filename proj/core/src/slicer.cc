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

#include "nocomments/slicer.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include "nocomments/error.h"

namespace nocomments {

std::string_view to_string(SliceErrorKind kind) {
  switch (kind) {
    case SliceErrorKind::kMissingOpening:
      return "MissingOpening";
    case SliceErrorKind::kMissingClosure:
      return "MissingClosure";
    case SliceErrorKind::kMultipleOpenings:
      return "MultipleOpenings";
  }
  return "Unknown";
}

std::optional<SliceErrorKind> slice_error_kind_from_string(std::string_view s) {
  for (auto kind :
       {SliceErrorKind::kMissingOpening, SliceErrorKind::kMissingClosure,
        SliceErrorKind::kMultipleOpenings}) {
    if (to_string(kind) == s) return kind;
  }
  return std::nullopt;
}

bool SlicedPage::has_error(SliceErrorKind kind) const {
  return std::any_of(errors.begin(), errors.end(),
                     [kind](const SliceError& e) { return e.kind == kind; });
}

bool SlicedPage::in_comment_section(std::size_t offset) const {
  // Sections are sorted and disjoint.
  auto it = std::upper_bound(
      comment_section_spans.begin(), comment_section_spans.end(), offset,
      [](std::size_t value, const Span& span) { return value < span.start; });
  if (it == comment_section_spans.begin()) return false;
  return std::prev(it)->contains(offset);
}

namespace {

void check_same_page(const Page& page, const SlicedPage& sliced) {
  if (sliced.site_id != page.site_id || sliced.page_path != page.page_path ||
      sliced.length != page.raw_bytes.size()) {
    throw Error("sliced page " + sliced.site_id + "/" + sliced.page_path +
                " does not correspond to page " + page.site_id + "/" +
                page.page_path);
  }
}

std::optional<std::uint64_t> parse_depth(std::string_view value) {
  const auto first = std::find_if(value.begin(), value.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
  if (first == value.end()) return std::nullopt;
  const auto last = std::find_if(first, value.end(), [](char c) {
    return c < '0' || c > '9';
  });
  std::uint64_t depth = 0;
  const char* begin = value.data() + (first - value.begin());
  const char* end = value.data() + (last - value.begin());
  const auto [ptr, ec] = std::from_chars(begin, end, depth);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return depth;
}

std::optional<std::string> extract_field(const std::optional<Pattern>& pattern,
                                         std::string_view fragment) {
  if (!pattern) return std::nullopt;
  return pattern->extract(fragment);
}

}  // namespace

SlicedPage rough_slice(const Page& page, const EncodingRule& rule) {
  if (rule.site_id != page.site_id) {
    throw Error("rule for site '" + rule.site_id + "' applied to page " +
                page.site_id + "/" + page.page_path);
  }
  const std::string_view raw = page.raw_bytes;
  SlicedPage out;
  out.site_id = page.site_id;
  out.page_path = page.page_path;
  out.length = raw.size();

  auto report = [&](SliceErrorKind kind, std::string detail) {
    out.errors.push_back(
        SliceError{page.site_id, page.page_path, kind, std::move(detail)});
  };
  auto whole_page = [&] {
    out.main_spans = {Span{0, raw.size()}};
    out.comment_section_spans.clear();
    std::sort(out.errors.begin(), out.errors.end(),
              [](const SliceError& a, const SliceError& b) {
                return a.kind < b.kind;
              });
    return out;
  };

  if (!rule.has_comments) return whole_page();

  std::optional<Match> open = rule.open_pattern->find(raw, 0);
  if (!open) {
    report(SliceErrorKind::kMissingOpening, "opening pattern not found");
    return whole_page();
  }

  std::vector<Span> sections;
  std::size_t later_openings = 0;
  std::size_t first_later_opening = 0;
  auto flag_multiple = [&] {
    if (later_openings == 0) return;
    report(SliceErrorKind::kMultipleOpenings,
           std::to_string(later_openings + 1) +
               " openings; first repeat at byte " +
               std::to_string(first_later_opening));
  };

  while (open) {
    std::optional<Match> close;
    if (rule.close_pattern) close = rule.close_pattern->find(raw, open->end);
    if (!close) {
      flag_multiple();
      report(SliceErrorKind::kMissingClosure,
             "no closing pattern after opening at byte " +
                 std::to_string(open->start));
      return whole_page();
    }
    if (close->end > open->start) sections.push_back({open->start, close->end});
    const std::size_t resume =
        close->end > open->start ? close->end : open->start + 1;
    open = rule.open_pattern->find(raw, resume);
    if (open) {
      if (later_openings == 0) first_later_opening = open->start;
      ++later_openings;
    }
  }
  flag_multiple();

  std::size_t cursor = 0;
  for (const Span& section : sections) {
    if (section.start > cursor) out.main_spans.push_back({cursor, section.start});
    cursor = section.end;
  }
  if (cursor < raw.size()) out.main_spans.push_back({cursor, raw.size()});
  out.comment_section_spans = std::move(sections);
  if (out.main_spans.empty() && out.comment_section_spans.empty()) {
    out.main_spans.push_back({0, 0});
  }
  return out;
}

std::vector<std::string_view> span_views(std::string_view raw,
                                         const std::vector<Span>& spans) {
  std::vector<std::string_view> out;
  out.reserve(spans.size());
  for (const Span& span : spans) out.push_back(raw.substr(span.start, span.size()));
  return out;
}

std::string strip(const Page& page, const SlicedPage& sliced) {
  check_same_page(page, sliced);
  std::string out;
  std::size_t size = 0;
  for (const Span& span : sliced.main_spans) size += span.size();
  out.reserve(size);
  for (const Span& span : sliced.main_spans) {
    out.append(page.raw_bytes, span.start, span.size());
  }
  return out;
}

std::vector<std::string> extract_sections(const Page& page,
                                          const SlicedPage& sliced) {
  check_same_page(page, sliced);
  std::vector<std::string> out;
  out.reserve(sliced.comment_section_spans.size());
  for (const Span& span : sliced.comment_section_spans) {
    out.push_back(page.raw_bytes.substr(span.start, span.size()));
  }
  return out;
}

PreciseSlice precise_slice(std::string_view section, const EncodingRule& rule) {
  if (!rule.comment_pattern) {
    throw Error("site '" + rule.site_id +
                "' has no comment_pattern; precise slicing is not configured");
  }
  PreciseSlice out;
  if (rule.empty_size) {
    if (section.size() == *rule.empty_size) return out;
    if (section.size() < *rule.empty_size) {
      out.anomaly = "section of " + std::to_string(section.size()) +
                    " bytes is shorter than the empty size " +
                    std::to_string(*rule.empty_size);
    }
  }

  const std::vector<Match> starts = rule.comment_pattern->find_all(section);
  out.comments.reserve(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const std::size_t begin = starts[i].start;
    const std::size_t end =
        i + 1 < starts.size() ? starts[i + 1].start : section.size();
    const std::string_view fragment = section.substr(begin, end - begin);

    Comment comment;
    comment.index = i;
    comment.span = {begin, end};
    comment.author = extract_field(rule.author_pattern, fragment);
    comment.date = extract_field(rule.date_pattern, fragment);
    if (auto depth = extract_field(rule.depth_pattern, fragment)) {
      comment.depth = parse_depth(*depth);
    }
    comment.author_url = extract_field(rule.author_url_pattern, fragment);
    comment.text = extract_field(rule.text_pattern, fragment);
    out.comments.push_back(std::move(comment));
  }
  return out;
}

PageComments precise_slice_sections(const Page& page, const SlicedPage& sliced,
                                    const EncodingRule& rule) {
  check_same_page(page, sliced);
  PageComments out;
  const std::string_view raw = page.raw_bytes;
  for (std::size_t k = 0; k < sliced.comment_section_spans.size(); ++k) {
    const Span& span = sliced.comment_section_spans[k];
    PreciseSlice slice =
        precise_slice(raw.substr(span.start, span.size()), rule);
    if (slice.anomaly) {
      ++out.short_sections;
      out.anomalies.push_back("section " + std::to_string(k) + ": " +
                              *slice.anomaly);
    }
    for (Comment& comment : slice.comments) {
      comment.site_id = page.site_id;
      comment.page_path = page.page_path;
      comment.section = k;
      comment.span.start += span.start;
      comment.span.end += span.start;
      out.comments.push_back(std::move(comment));
    }
  }
  return out;
}

PageComments precise_slice_page(const Page& page, const EncodingRule& rule) {
  PageComments out;
  PreciseSlice slice = precise_slice(page.raw_bytes, rule);
  if (slice.anomaly) {
    ++out.short_sections;
    out.anomalies.push_back(*slice.anomaly);
  }
  for (Comment& comment : slice.comments) {
    comment.site_id = page.site_id;
    comment.page_path = page.page_path;
    out.comments.push_back(std::move(comment));
  }
  return out;
}

}  // namespace nocomments
