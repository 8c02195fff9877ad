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

#ifndef NOCOMMENTS_ERROR_REPORT_H_
#define NOCOMMENTS_ERROR_REPORT_H_

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nocomments/slicer.h"

namespace nocomments {

struct SiteSummary {
  std::size_t pages = 0;
  std::size_t pages_with_sections = 0;
  std::size_t sections = 0;
  std::size_t comments = 0;
  std::size_t missing_opening = 0;
  std::size_t missing_closure = 0;
  std::size_t multiple_openings = 0;
  // Sections shorter than the rule's empty size; extraction failures.
  std::size_t short_sections = 0;
  std::size_t min_section_size = std::numeric_limits<std::size_t>::max();
  std::size_t max_section_size = 0;

  std::size_t count(SliceErrorKind kind) const;

  // Every extracted section has the same byte length and there are at least
  // two of them: either extraction failed or the site has no comments.
  bool uniform_size_warning() const {
    return sections >= 2 && min_section_size == max_section_size;
  }

  void merge(const SiteSummary& other);

  friend bool operator==(const SiteSummary&, const SiteSummary&) = default;
};

struct PageCommentStats {
  std::size_t comments = 0;
  std::size_t short_sections = 0;
};

using PageKey = std::pair<std::string, std::string>;  // (site_id, page_path)
using CommentsPerPage = std::map<PageKey, PageCommentStats>;

class ErrorReport {
 public:
  void add_page(const SlicedPage& sliced, const PageCommentStats* stats);

  // Associative and commutative; any reduction order gives the same report.
  void merge(const ErrorReport& other);

  // Pages with the given error kind, corpus-wide.
  std::size_t count(SliceErrorKind kind) const;
  std::size_t count(const std::string& site_id, SliceErrorKind kind) const;

  // Sites raising the uniform-size warning, sorted.
  std::vector<std::string> uniform_size_warnings() const;

  // Sorted by (site_id, page_path, kind, detail).
  std::vector<SliceError> sorted_errors() const;
  const std::map<std::string, SiteSummary>& sites() const { return sites_; }

  // site_id,page_path,kind,detail
  std::string errors_csv() const;
  // site_id,pages,pages_with_sections,sections,comments,missing_opening,
  // missing_closure,multiple_openings,short_sections,section_size,
  // uniform_size_warning
  std::string summary_csv() const;

 private:
  std::vector<SliceError> errors_;
  std::map<std::string, SiteSummary> sites_;
};

ErrorReport build_error_report(const std::vector<SlicedPage>& all,
                               const CommentsPerPage& comments_per_page);

}  // namespace nocomments

#endif  // NOCOMMENTS_ERROR_REPORT_H_
