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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "nocomments/corpus.h"
#include "nocomments/encoding.h"
#include "nocomments/linkgraph.h"
#include "nocomments/slicer.h"
#include "nocomments/textstats.h"

namespace nocomments {
namespace {

const char* const kWords[] = {"vaccin", "santé", "article", "lecture",
                              "enfants", "étude", "médecin", "réponse"};

std::string paragraph(std::mt19937_64& rng, std::size_t words) {
  std::string out = "<p>";
  for (std::size_t i = 0; i < words; ++i) {
    out += kWords[rng() % std::size(kWords)];
    out += ' ';
  }
  if (rng() % 3 == 0) out += "<a href=\"https://b.example/p\">lien</a>";
  out += "</p>\n";
  return out;
}

// About 'bytes' bytes of HTML with one comment section in the middle.
std::string synthetic_page(std::size_t bytes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string page = "<html><body><article>\n";
  while (page.size() < bytes / 2) page += paragraph(rng, 12);
  page += "<div id=\"comments\">\n";
  while (page.size() < bytes) {
    page += "<div class=\"comment\"><span class=\"author\">anon</span>";
    page += paragraph(rng, 8);
    page += "</div>\n";
  }
  page += "</div><footer>fin</footer></body></html>\n";
  return page;
}

EncodingRule bench_rule() {
  EncodingRule rule;
  rule.site_id = "a";
  rule.label = "L";
  rule.has_comments = true;
  rule.open_pattern = Pattern::literal("<div id=\"comments\">");
  rule.close_pattern = Pattern::literal("<footer>");
  rule.comment_pattern = Pattern::literal("<div class=\"comment\">");
  rule.author_pattern = Pattern::literal("<span class=\"author\">{}</span>");
  return rule;
}

void BM_RoughSlice(benchmark::State& state) {
  const Page page{"a", "a/p.html",
                  synthetic_page(static_cast<std::size_t>(state.range(0)), 1)};
  const EncodingRule rule = bench_rule();
  for (auto _ : state) {
    benchmark::DoNotOptimize(rough_slice(page, rule));
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(page.raw_bytes.size()));
}
BENCHMARK(BM_RoughSlice)->Arg(5 << 10)->Arg(64 << 10);

void BM_PreciseSlice(benchmark::State& state) {
  const Page page{"a", "a/p.html", synthetic_page(5 << 10, 2)};
  const EncodingRule rule = bench_rule();
  const SlicedPage sliced = rough_slice(page, rule);
  for (auto _ : state) {
    benchmark::DoNotOptimize(precise_slice_sections(page, sliced, rule));
  }
}
BENCHMARK(BM_PreciseSlice);

void BM_Tokenize(benchmark::State& state) {
  const std::string page = synthetic_page(5 << 10, 3);
  const StopwordList stopwords = StopwordList::french();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tokenize(page, stopwords));
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(page.size()));
}
BENCHMARK(BM_Tokenize);

void BM_ExtractLinks(benchmark::State& state) {
  SiteRegistry registry;
  registry.add({"a", "L", {"a.example"}});
  registry.add({"b", "L", {"b.example"}});
  const Page page{"a", "a/p.html", synthetic_page(5 << 10, 4)};
  const SlicedPage sliced = rough_slice(page, bench_rule());
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_links(page, sliced, registry));
  }
}
BENCHMARK(BM_ExtractLinks);

}  // namespace
}  // namespace nocomments

BENCHMARK_MAIN();
