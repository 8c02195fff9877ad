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

#ifndef NOCOMMENTS_OUTPUTS_H_
#define NOCOMMENTS_OUTPUTS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nocomments/slicer.h"

namespace nocomments {

// Writes bytes verbatim, creating parent directories. Throws Error naming the
// path on failure.
void write_file(const std::filesystem::path& path, std::string_view bytes);

// Reads a whole file in binary mode. Throws Error naming the path.
std::string read_file(const std::filesystem::path& path);

// "site/a.html", 0 -> "site/a.section-0.html"
std::string section_file_name(std::string_view page_path, std::size_t n);

// One JSON object per line with keys site_id, page_path, section, index,
// span_start, span_end, author, date, depth, author_url, text. Absent fields
// are null.
std::string comments_jsonl(const std::vector<Comment>& comments);

struct TokenizedDocument {
  std::string site_id;
  std::string page_path;
  std::vector<std::string> tokens;
};

// {"site_id":..,"page_path":..,"tokens":[..]} per line, for external topic
// modelling.
std::string documents_jsonl(const std::vector<TokenizedDocument>& docs);

}  // namespace nocomments

#endif  // NOCOMMENTS_OUTPUTS_H_
