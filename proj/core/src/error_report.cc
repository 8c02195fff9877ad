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

#include "nocomments/error_report.h"

#include <algorithm>
#include <tuple>

#include "nocomments/csv.h"

namespace nocomments {

std::size_t SiteSummary::count(SliceErrorKind kind) const {
  switch (kind) {
    case SliceErrorKind::kMissingOpening:
      return missing_opening;
    case SliceErrorKind::kMissingClosure:
      return missing_closure;
    case SliceErrorKind::kMultipleOpenings:
      return multiple_openings;
  }
  return 0;
}

void SiteSummary::merge(const SiteSummary& other) {
  pages += other.pages;
  pages_with_sections += other.pages_with_sections;
  sections += other.sections;
  comments += other.comments;
  missing_opening += other.missing_opening;
  missing_closure += other.missing_closure;
  multiple_openings += other.multiple_openings;
  short_sections += other.short_sections;
  min_section_size = std::min(min_section_size, other.min_section_size);
  max_section_size = std::max(max_section_size, other.max_section_size);
}

void ErrorReport::add_page(const SlicedPage& sliced,
                           const PageCommentStats* stats) {
  SiteSummary page;
  page.pages = 1;
  page.sections = sliced.comment_section_spans.size();
  page.pages_with_sections = page.sections > 0 ? 1 : 0;
  for (const Span& span : sliced.comment_section_spans) {
    page.min_section_size = std::min(page.min_section_size, span.size());
    page.max_section_size = std::max(page.max_section_size, span.size());
  }
  for (const SliceError& error : sliced.errors) {
    switch (error.kind) {
      case SliceErrorKind::kMissingOpening:
        page.missing_opening = 1;
        break;
      case SliceErrorKind::kMissingClosure:
        page.missing_closure = 1;
        break;
      case SliceErrorKind::kMultipleOpenings:
        page.multiple_openings = 1;
        break;
    }
    errors_.push_back(error);
  }
  if (stats) {
    page.comments = stats->comments;
    page.short_sections = stats->short_sections;
  }
  sites_[sliced.site_id].merge(page);
}

void ErrorReport::merge(const ErrorReport& other) {
  errors_.insert(errors_.end(), other.errors_.begin(), other.errors_.end());
  for (const auto& [site, summary] : other.sites_) sites_[site].merge(summary);
}

std::size_t ErrorReport::count(SliceErrorKind kind) const {
  std::size_t total = 0;
  for (const auto& [site, summary] : sites_) total += summary.count(kind);
  return total;
}

std::size_t ErrorReport::count(const std::string& site_id,
                               SliceErrorKind kind) const {
  auto it = sites_.find(site_id);
  return it == sites_.end() ? 0 : it->second.count(kind);
}

std::vector<std::string> ErrorReport::uniform_size_warnings() const {
  std::vector<std::string> out;
  for (const auto& [site, summary] : sites_) {
    if (summary.uniform_size_warning()) out.push_back(site);
  }
  return out;
}

std::vector<SliceError> ErrorReport::sorted_errors() const {
  std::vector<SliceError> out = errors_;
  std::sort(out.begin(), out.end(),
            [](const SliceError& a, const SliceError& b) {
              return std::tie(a.site_id, a.page_path, a.kind, a.detail) <
                     std::tie(b.site_id, b.page_path, b.kind, b.detail);
            });
  return out;
}

std::string ErrorReport::errors_csv() const {
  std::string out = "site_id,page_path,kind,detail\n";
  for (const SliceError& e : sorted_errors()) {
    csv::append_row(out, {e.site_id, e.page_path, to_string(e.kind), e.detail});
  }
  return out;
}

std::string ErrorReport::summary_csv() const {
  std::string out =
      "site_id,pages,pages_with_sections,sections,comments,missing_opening,"
      "missing_closure,multiple_openings,short_sections,section_size,"
      "uniform_size_warning\n";
  for (const auto& [site, s] : sites_) {
    // section_size is the shared length when every section has one, else
    // "min-max", else empty.
    std::string size;
    if (s.sections > 0) {
      size = std::to_string(s.min_section_size);
      if (s.max_section_size != s.min_section_size) {
        size += "-" + std::to_string(s.max_section_size);
      }
    }
    const std::string fields[] = {
        std::to_string(s.pages),
        std::to_string(s.pages_with_sections),
        std::to_string(s.sections),
        std::to_string(s.comments),
        std::to_string(s.missing_opening),
        std::to_string(s.missing_closure),
        std::to_string(s.multiple_openings),
        std::to_string(s.short_sections),
        size,
        s.uniform_size_warning() ? "true" : "false",
    };
    std::vector<std::string_view> row{site};
    row.insert(row.end(), std::begin(fields), std::end(fields));
    csv::append_row(out, row);
  }
  return out;
}

ErrorReport build_error_report(const std::vector<SlicedPage>& all,
                               const CommentsPerPage& comments_per_page) {
  ErrorReport report;
  for (const SlicedPage& sliced : all) {
    auto it = comments_per_page.find({sliced.site_id, sliced.page_path});
    report.add_page(sliced,
                    it == comments_per_page.end() ? nullptr : &it->second);
  }
  return report;
}

}  // namespace nocomments
