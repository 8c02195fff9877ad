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

#include "nocomments/pipeline.h"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "nocomments/error.h"

namespace nocomments {

unsigned default_jobs() {
  if (const char* env = std::getenv("NOCOMMENTS_JOBS")) {
    const std::string_view s(env);
    unsigned value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && end == s.data() + s.size() && value > 0) {
      return value;
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SlicedPage> rough_slice_all(const Corpus& corpus,
                                        const EncodingFile& rules,
                                        unsigned jobs) {
  std::vector<const EncodingRule*> page_rules(corpus.pages.size());
  for (std::size_t i = 0; i < corpus.pages.size(); ++i) {
    page_rules[i] = rules.find(corpus.pages[i].site_id);
    if (!page_rules[i]) {
      throw Error("no encoding rule for site '" + corpus.pages[i].site_id +
                  "'");
    }
  }
  std::vector<SlicedPage> out(corpus.pages.size());
  parallel_for(corpus.pages.size(), jobs, [&](std::size_t i) {
    out[i] = rough_slice(corpus.pages[i], *page_rules[i]);
  });
  return out;
}

std::vector<Edge> extract_all_links(const Corpus& corpus,
                                    const std::vector<SlicedPage>& sliced,
                                    unsigned jobs,
                                    LinkDiagnostics* diagnostics) {
  if (sliced.size() != corpus.pages.size()) {
    throw Error("extract_all_links: sliced pages do not match the corpus");
  }
  std::vector<std::vector<Edge>> per_page(corpus.pages.size());
  std::vector<LinkDiagnostics> diags(corpus.pages.size());
  parallel_for(corpus.pages.size(), jobs, [&](std::size_t i) {
    per_page[i] =
        extract_links(corpus.pages[i], sliced[i], corpus.registry, &diags[i]);
  });
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < per_page.size(); ++i) {
    edges.insert(edges.end(), std::make_move_iterator(per_page[i].begin()),
                 std::make_move_iterator(per_page[i].end()));
    if (diagnostics) diagnostics->merge(diags[i]);
  }
  return edges;
}

}  // namespace nocomments
