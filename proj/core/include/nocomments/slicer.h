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

#ifndef NOCOMMENTS_SLICER_H_
#define NOCOMMENTS_SLICER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nocomments/corpus.h"
#include "nocomments/encoding.h"

namespace nocomments {

// Half-open byte range into a page's raw_bytes.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool contains(std::size_t offset) const {
    return offset >= start && offset < end;
  }

  friend bool operator==(const Span&, const Span&) = default;
};

enum class SliceErrorKind { kMissingOpening, kMissingClosure, kMultipleOpenings };

// "MissingOpening", "MissingClosure", "MultipleOpenings".
std::string_view to_string(SliceErrorKind kind);
std::optional<SliceErrorKind> slice_error_kind_from_string(std::string_view s);

struct SliceError {
  std::string site_id;
  std::string page_path;
  SliceErrorKind kind = SliceErrorKind::kMissingOpening;
  std::string detail;

  friend bool operator==(const SliceError&, const SliceError&) = default;
};

// A page partitioned into main content and comment sections. The two span
// lists are disjoint, sorted, and together cover [0, length) exactly; empty
// main gaps are omitted except for the single [0, 0) span of an empty page.
struct SlicedPage {
  std::string site_id;
  std::string page_path;
  std::size_t length = 0;
  std::vector<Span> main_spans;
  std::vector<Span> comment_section_spans;
  std::vector<SliceError> errors;

  bool has_error(SliceErrorKind kind) const;
  // True if 'offset' falls inside a comment section.
  bool in_comment_section(std::size_t offset) const;

  friend bool operator==(const SlicedPage&, const SlicedPage&) = default;
};

// Rough slicing. First opening match, then the first closing match at or
// after the opening's end; the section spans both delimiters. Openings inside
// an open section are ignored. Each further opening after a closed section
// starts another section and flags MultipleOpenings once per page. A missing
// opening (with has_comments set) or any opening without a closing leaves the
// whole page as main content and records the error.
//
// Throws Error if the rule belongs to another site.
SlicedPage rough_slice(const Page& page, const EncodingRule& rule);

// Views of raw[span] for each span, in order.
std::vector<std::string_view> span_views(std::string_view raw,
                                         const std::vector<Span>& spans);

// Main spans concatenated: the page with every comment section removed.
std::string strip(const Page& page, const SlicedPage& sliced);

// One byte string per comment section, in document order.
std::vector<std::string> extract_sections(const Page& page,
                                          const SlicedPage& sliced);

struct Comment {
  std::string site_id;
  std::string page_path;
  // Which comment section of the page (0-based), 0 for direct slicing.
  std::size_t section = 0;
  // 0-based position within the section.
  std::size_t index = 0;
  // Offsets into the buffer that was precise-sliced: the section itself for
  // precise_slice, the page for the page-level variants.
  Span span;
  std::optional<std::string> author;
  std::optional<std::string> date;
  std::optional<std::uint64_t> depth;
  std::optional<std::string> author_url;
  std::optional<std::string> text;

  friend bool operator==(const Comment&, const Comment&) = default;
};

struct PreciseSlice {
  std::vector<Comment> comments;
  // Set when the section is shorter than the rule's empty_size.
  std::optional<std::string> anomaly;
};

// Precise slicing of one section. A section exactly empty_size bytes long
// yields no comments. Otherwise every comment_pattern match starts a comment
// that runs to the next match (the last one to the end of the section), and
// the field patterns are applied inside that fragment. Absent or non-matching
// field patterns leave the field empty; depth takes the first run of digits
// of its capture.
//
// Throws Error if the rule has no comment_pattern.
PreciseSlice precise_slice(std::string_view section, const EncodingRule& rule);

struct PageComments {
  std::vector<Comment> comments;
  std::size_t short_sections = 0;
  std::vector<std::string> anomalies;
};

// Precise-slices every comment section of an already rough-sliced page.
// Comment spans are page offsets.
PageComments precise_slice_sections(const Page& page, const SlicedPage& sliced,
                                    const EncodingRule& rule);

// Precise-slices the whole page as if it were one section.
PageComments precise_slice_page(const Page& page, const EncodingRule& rule);

}  // namespace nocomments

#endif  // NOCOMMENTS_SLICER_H_
