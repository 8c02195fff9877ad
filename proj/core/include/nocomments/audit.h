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

#ifndef NOCOMMENTS_AUDIT_H_
#define NOCOMMENTS_AUDIT_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nocomments/corpus.h"
#include "nocomments/encoding.h"
#include "nocomments/textstats.h"

namespace nocomments {

// Sample-evaluate-decide procedure for whether a corpus needs its comment
// sections removed before analysis.

enum class NoiseMetric { kLinkNoise, kTokenNoise, kTextDivergence };

std::string_view to_string(NoiseMetric metric);

// Defaults are conventions, not derived values.
struct NoiseThresholds {
  double link_noise = 0.05;
  double token_noise = 0.05;
  double text_divergence = 0.05;  // bits

  double get(NoiseMetric metric) const;
};

// Evidence a human needs for judging whether the comments deserve a study of
// their own; not used by decide().
struct SiteNoise {
  std::size_t pages = 0;
  std::size_t sections = 0;
  std::size_t section_bytes = 0;
  std::size_t slice_errors = 0;
  std::size_t main_edges = 0;
  std::size_t comment_edges = 0;
  std::size_t main_tokens = 0;
  std::size_t comment_tokens = 0;
  std::size_t comments = 0;
  std::size_t distinct_author_urls = 0;
};

struct NoiseMetrics {
  // Comment-located share of non-self links between registered sites.
  double link_noise = 0.0;
  // Comment-section share of tokens.
  double token_noise = 0.0;
  // frequency_divergence(with comments, without comments), bits.
  double text_divergence = 0.0;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;

  std::size_t comment_edges = 0;
  std::size_t total_edges = 0;
  std::size_t comment_tokens = 0;
  std::size_t total_tokens = 0;
  std::size_t missing_opening = 0;
  std::size_t missing_closure = 0;
  std::size_t multiple_openings = 0;
  std::map<std::string, SiteNoise> sites;

  double get(NoiseMetric metric) const;
};

enum class Decision { kKeep, kSlice };

struct SliceRecommendation {
  Decision decision = Decision::kKeep;
  // Exactly the metrics strictly above their threshold, in enum order.
  std::vector<NoiseMetric> triggered_by;
  NoiseThresholds thresholds;
};

// min(n, pages) pages without replacement, stratified by site: sites are
// visited round-robin in a seeded random order and each site contributes its
// pages in a seeded random order. Deterministic for a given seed on every
// platform. Throws Error for an empty corpus or n == 0.
std::vector<const Page*> sample_corpus(const Corpus& corpus, std::size_t n,
                                       std::uint64_t seed);

// Rough-slices each sampled page and measures the comment share of links and
// tokens plus the divergence of the two token tables. Throws Error if a page's
// site has no rule.
NoiseMetrics measure_noise(const std::vector<const Page*>& sample,
                           const EncodingFile& rules,
                           const SiteRegistry& registry,
                           const StopwordList& stopwords, unsigned jobs = 1);

// Slice iff any metric strictly exceeds its threshold. Throws Error on a
// negative threshold.
SliceRecommendation decide(const NoiseMetrics& metrics,
                           const NoiseThresholds& thresholds);

std::string audit_text(const NoiseMetrics& metrics,
                       const SliceRecommendation& recommendation);
// metric,value,threshold,triggered followed by decision and sample rows.
std::string audit_csv(const NoiseMetrics& metrics,
                      const SliceRecommendation& recommendation);
std::string audit_sites_csv(const NoiseMetrics& metrics);

}  // namespace nocomments

#endif  // NOCOMMENTS_AUDIT_H_
