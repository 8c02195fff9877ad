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

#include "nocomments/audit.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "nocomments/csv.h"
#include "nocomments/error.h"
#include "nocomments/linkgraph.h"
#include "nocomments/pipeline.h"
#include "nocomments/slicer.h"

namespace nocomments {

std::string_view to_string(NoiseMetric metric) {
  switch (metric) {
    case NoiseMetric::kLinkNoise:
      return "link_noise";
    case NoiseMetric::kTokenNoise:
      return "token_noise";
    case NoiseMetric::kTextDivergence:
      return "text_divergence";
  }
  return "unknown";
}

double NoiseThresholds::get(NoiseMetric metric) const {
  switch (metric) {
    case NoiseMetric::kLinkNoise:
      return link_noise;
    case NoiseMetric::kTokenNoise:
      return token_noise;
    case NoiseMetric::kTextDivergence:
      return text_divergence;
  }
  return 0.0;
}

double NoiseMetrics::get(NoiseMetric metric) const {
  switch (metric) {
    case NoiseMetric::kLinkNoise:
      return link_noise;
    case NoiseMetric::kTokenNoise:
      return token_noise;
    case NoiseMetric::kTextDivergence:
      return text_divergence;
  }
  return 0.0;
}

namespace {

constexpr NoiseMetric kAllMetrics[] = {NoiseMetric::kLinkNoise,
                                       NoiseMetric::kTokenNoise,
                                       NoiseMetric::kTextDivergence};

// Uniform integer in [0, bound) from raw engine output. std::shuffle and the
// standard distributions are implementation-defined, this is not.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  // 2^64 mod bound; values below it would bias the remainder.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % bound;
}

template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[bounded(rng, i)]);
  }
}

std::string number(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return ec == std::errc() ? std::string(buffer, end) : std::string("nan");
}

std::string fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

double ratio(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0
                    : static_cast<double>(part) / static_cast<double>(whole);
}

struct PageNoise {
  SiteNoise site;
  std::vector<std::string> with_tokens;
  std::vector<std::string> main_tokens;
  std::set<std::string> author_urls;
  bool missing_opening = false;
  bool missing_closure = false;
  bool multiple_openings = false;
};

PageNoise measure_page(const Page& page, const EncodingRule& rule,
                       const SiteRegistry& registry,
                       const StopwordList& stopwords) {
  PageNoise out;
  const SlicedPage sliced = rough_slice(page, rule);
  out.site.pages = 1;
  out.site.sections = sliced.comment_section_spans.size();
  for (const Span& span : sliced.comment_section_spans) {
    out.site.section_bytes += span.size();
  }
  out.site.slice_errors = sliced.errors.size();
  out.missing_opening = sliced.has_error(SliceErrorKind::kMissingOpening);
  out.missing_closure = sliced.has_error(SliceErrorKind::kMissingClosure);
  out.multiple_openings = sliced.has_error(SliceErrorKind::kMultipleOpenings);

  for (const Edge& edge : extract_links(page, sliced, registry)) {
    if (edge.is_self()) continue;
    if (edge.location == LinkLocation::kCommentSection) {
      ++out.site.comment_edges;
    } else {
      ++out.site.main_edges;
    }
  }

  const std::string_view raw = page.raw_bytes;
  out.with_tokens = tokenize(raw, stopwords);
  out.main_tokens =
      tokenize_pieces(span_views(raw, sliced.main_spans), stopwords);
  out.site.main_tokens = out.main_tokens.size();
  out.site.comment_tokens =
      tokenize_pieces(span_views(raw, sliced.comment_section_spans), stopwords)
          .size();

  if (rule.supports_precise() && !sliced.comment_section_spans.empty()) {
    const PageComments comments = precise_slice_sections(page, sliced, rule);
    out.site.comments = comments.comments.size();
    for (const Comment& c : comments.comments) {
      if (c.author_url) out.author_urls.insert(*c.author_url);
    }
  }
  return out;
}

}  // namespace

std::vector<const Page*> sample_corpus(const Corpus& corpus, std::size_t n,
                                       std::uint64_t seed) {
  if (corpus.pages.empty()) throw Error("cannot sample an empty corpus");
  if (n == 0) throw Error("sample size must be at least 1");

  std::map<std::string, std::vector<const Page*>> by_site;
  for (const Page& page : corpus.pages) by_site[page.site_id].push_back(&page);

  std::mt19937_64 rng(seed);
  std::vector<std::vector<const Page*>*> order;
  for (auto& [site, pages] : by_site) order.push_back(&pages);
  seeded_shuffle(order, rng);
  for (auto* pages : order) seeded_shuffle(*pages, rng);

  const std::size_t want = std::min(n, corpus.pages.size());
  std::vector<const Page*> sample;
  sample.reserve(want);
  for (std::size_t round = 0; sample.size() < want; ++round) {
    for (auto* pages : order) {
      if (round < pages->size() && sample.size() < want) {
        sample.push_back((*pages)[round]);
      }
    }
  }
  return sample;
}

NoiseMetrics measure_noise(const std::vector<const Page*>& sample,
                           const EncodingFile& rules,
                           const SiteRegistry& registry,
                           const StopwordList& stopwords, unsigned jobs) {
  for (const Page* page : sample) {
    if (!rules.find(page->site_id)) {
      throw Error("no encoding rule for site '" + page->site_id + "'");
    }
  }

  std::vector<PageNoise> pages(sample.size());
  parallel_for(sample.size(), jobs, [&](std::size_t i) {
    const Page& page = *sample[i];
    pages[i] = measure_page(page, *rules.find(page.site_id), registry,
                            stopwords);
  });

  NoiseMetrics metrics;
  metrics.sample_size = sample.size();
  TokenTable with_comments;
  TokenTable without_comments;
  std::map<std::string, std::set<std::string>> author_urls;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    const PageNoise& p = pages[i];
    SiteNoise& site = metrics.sites[sample[i]->site_id];
    site.pages += p.site.pages;
    site.sections += p.site.sections;
    site.section_bytes += p.site.section_bytes;
    site.slice_errors += p.site.slice_errors;
    site.main_edges += p.site.main_edges;
    site.comment_edges += p.site.comment_edges;
    site.main_tokens += p.site.main_tokens;
    site.comment_tokens += p.site.comment_tokens;
    site.comments += p.site.comments;
    author_urls[sample[i]->site_id].insert(p.author_urls.begin(),
                                           p.author_urls.end());

    metrics.comment_edges += p.site.comment_edges;
    metrics.total_edges += p.site.comment_edges + p.site.main_edges;
    metrics.comment_tokens += p.site.comment_tokens;
    metrics.total_tokens += p.site.comment_tokens + p.site.main_tokens;
    metrics.missing_opening += p.missing_opening;
    metrics.missing_closure += p.missing_closure;
    metrics.multiple_openings += p.multiple_openings;
    with_comments.add(p.with_tokens);
    without_comments.add(p.main_tokens);
  }
  for (auto& [site, urls] : author_urls) {
    metrics.sites[site].distinct_author_urls = urls.size();
  }

  metrics.link_noise = ratio(metrics.comment_edges, metrics.total_edges);
  metrics.token_noise = ratio(metrics.comment_tokens, metrics.total_tokens);
  metrics.text_divergence =
      with_comments.empty() && without_comments.empty()
          ? 0.0
          : frequency_divergence(with_comments, without_comments);
  return metrics;
}

SliceRecommendation decide(const NoiseMetrics& metrics,
                           const NoiseThresholds& thresholds) {
  SliceRecommendation out;
  out.thresholds = thresholds;
  for (NoiseMetric metric : kAllMetrics) {
    const double threshold = thresholds.get(metric);
    if (!(threshold >= 0.0)) {
      throw Error("threshold for " + std::string(to_string(metric)) +
                  " must be nonnegative");
    }
    if (metrics.get(metric) > threshold) out.triggered_by.push_back(metric);
  }
  out.decision = out.triggered_by.empty() ? Decision::kKeep : Decision::kSlice;
  return out;
}

std::string audit_text(const NoiseMetrics& metrics,
                       const SliceRecommendation& recommendation) {
  std::string out = "comment noise audit\n";
  out += "sample: " + std::to_string(metrics.sample_size) + " pages, seed " +
         std::to_string(metrics.seed) + "\n\n";
  for (NoiseMetric metric : kAllMetrics) {
    const bool hit =
        std::find(recommendation.triggered_by.begin(),
                  recommendation.triggered_by.end(),
                  metric) != recommendation.triggered_by.end();
    std::string name(to_string(metric));
    name.resize(17, ' ');
    out += "  " + name + fixed(metrics.get(metric)) + "  threshold " +
           fixed(recommendation.thresholds.get(metric)) +
           (hit ? "  EXCEEDED" : "") + "\n";
  }
  out += "\n  links:  " + std::to_string(metrics.comment_edges) + " of " +
         std::to_string(metrics.total_edges) + " in comment sections\n";
  out += "  tokens: " + std::to_string(metrics.comment_tokens) + " of " +
         std::to_string(metrics.total_tokens) + " in comment sections\n";
  out += "  slice errors: missing_opening=" +
         std::to_string(metrics.missing_opening) +
         " missing_closure=" + std::to_string(metrics.missing_closure) +
         " multiple_openings=" + std::to_string(metrics.multiple_openings) +
         "\n\n";
  if (recommendation.decision == Decision::kSlice) {
    out += "decision: slice (";
    for (std::size_t i = 0; i < recommendation.triggered_by.size(); ++i) {
      if (i > 0) out += ", ";
      out += to_string(recommendation.triggered_by[i]);
    }
    out += " above threshold)\n";
  } else {
    out += "decision: keep (every metric within its threshold)\n";
  }
  return out;
}

std::string audit_csv(const NoiseMetrics& metrics,
                      const SliceRecommendation& recommendation) {
  std::string out = "metric,value,threshold,triggered\n";
  for (NoiseMetric metric : kAllMetrics) {
    const bool hit =
        std::find(recommendation.triggered_by.begin(),
                  recommendation.triggered_by.end(),
                  metric) != recommendation.triggered_by.end();
    csv::append_row(out, {to_string(metric), number(metrics.get(metric)),
                          number(recommendation.thresholds.get(metric)),
                          hit ? "true" : "false"});
  }
  csv::append_row(out, {"decision",
                        recommendation.decision == Decision::kSlice ? "slice"
                                                                    : "keep",
                        "", ""});
  csv::append_row(out,
                  {"sample_size", std::to_string(metrics.sample_size), "", ""});
  csv::append_row(out, {"seed", std::to_string(metrics.seed), "", ""});
  return out;
}

std::string audit_sites_csv(const NoiseMetrics& metrics) {
  std::string out =
      "site_id,pages,sections,section_bytes,slice_errors,main_edges,"
      "comment_edges,main_tokens,comment_tokens,comments,"
      "distinct_author_urls\n";
  for (const auto& [site, s] : metrics.sites) {
    const std::string fields[] = {
        std::to_string(s.pages),          std::to_string(s.sections),
        std::to_string(s.section_bytes),  std::to_string(s.slice_errors),
        std::to_string(s.main_edges),     std::to_string(s.comment_edges),
        std::to_string(s.main_tokens),    std::to_string(s.comment_tokens),
        std::to_string(s.comments),       std::to_string(s.distinct_author_urls),
    };
    std::vector<std::string_view> row{site};
    row.insert(row.end(), std::begin(fields), std::end(fields));
    csv::append_row(out, row);
  }
  return out;
}

}  // namespace nocomments
