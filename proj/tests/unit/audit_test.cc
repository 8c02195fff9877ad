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

#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "nocomments/error.h"
#include "nocomments/linkgraph.h"
#include "support/test_support.h"

namespace nocomments {
namespace {

using ::nocomments::testing::literal_rule;

Corpus corpus_with(const std::map<std::string, int>& pages_per_site) {
  Corpus corpus;
  for (const auto& [site, n] : pages_per_site) {
    corpus.registry.add({site, "L", {site + ".org"}});
    for (int i = 0; i < n; ++i) {
      corpus.pages.push_back(
          {site, site + "/" + std::to_string(i) + ".html", "x"});
    }
  }
  return corpus;
}

TEST(SampleCorpusTest, StratifiedDeterministicWithoutReplacement) {
  const Corpus corpus = corpus_with({{"a", 10}, {"b", 1}, {"c", 4}, {"d", 2}});
  const auto s1 = sample_corpus(corpus, 6, 42);
  const auto s2 = sample_corpus(corpus, 6, 42);
  EXPECT_EQ(s1, s2);
  ASSERT_EQ(s1.size(), 6u);
  EXPECT_EQ(std::set<const Page*>(s1.begin(), s1.end()).size(), 6u);
  std::set<std::string> sites;
  for (const Page* p : s1) sites.insert(p->site_id);
  EXPECT_EQ(sites.size(), 4u);
  EXPECT_EQ(sample_corpus(corpus, 100, 1).size(), 17u);
  EXPECT_THROW(sample_corpus(corpus, 0, 1), Error);
  EXPECT_THROW(sample_corpus(Corpus{}, 3, 1), Error);
}

TEST(SampleCorpusTest, SeedsChangeSelection) {
  const Corpus corpus = corpus_with({{"a", 50}, {"b", 50}});
  std::set<std::vector<const Page*>> seen;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    seen.insert(sample_corpus(corpus, 5, seed));
  }
  EXPECT_GT(seen.size(), 5u);
}

TEST(SampleCorpusTest, RoughlyUniformWithinSite) {
  const Corpus corpus = corpus_with({{"a", 4}});
  std::map<std::string, int> first;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    ++first[sample_corpus(corpus, 1, seed)[0]->page_path];
  }
  ASSERT_EQ(first.size(), 4u);
  for (const auto& [path, n] : first) {
    EXPECT_NEAR(n, 1000, 150) << path;
  }
}

struct NoiseFixture {
  Corpus corpus;
  EncodingFile rules;
};

NoiseFixture noise_fixture() {
  NoiseFixture f;
  f.corpus.registry.add({"a", "L", {"a.org"}});
  f.corpus.registry.add({"b", "L", {"b.org"}});
  f.corpus.pages = {
      {"a", "a/1.html",
       "<p>vaccin sûr</p><a href=\"http://b.org/1\">b</a>"
       "<c><p>spam spam</p><a href=\"http://b.org/2\">b</a>"
       "<a href=\"http://a.org/self\">a</a></c>"},
      {"b", "b/1.html", "<p>réponse</p><a href=\"http://a.org/\">a</a>"}};
  f.rules.add(literal_rule("a", "<c>", "</c>"));
  f.rules.add(literal_rule("b", "<c>", "</c>"));
  return f;
}

TEST(MeasureNoiseTest, Metrics) {
  const NoiseFixture f = noise_fixture();
  const auto sample = sample_corpus(f.corpus, 2, 0);
  const NoiseMetrics m = measure_noise(sample, f.rules, f.corpus.registry,
                                       StopwordList());
  EXPECT_EQ(m.total_edges, 3u);
  EXPECT_EQ(m.comment_edges, 1u);
  EXPECT_DOUBLE_EQ(m.link_noise, 1.0 / 3.0);
  // with comments: vaccin sûr spam spam réponse; a.org b.org text is "b"/"a".
  EXPECT_EQ(m.comment_tokens, 2u);
  EXPECT_EQ(m.total_tokens, 5u);
  EXPECT_DOUBLE_EQ(m.token_noise, 0.4);
  EXPECT_GT(m.text_divergence, 0.0);
  EXPECT_EQ(m.missing_opening, 1u);
  EXPECT_EQ(m.sites.at("a").comment_edges, 1u);
  EXPECT_EQ(m.sites.at("a").sections, 1u);

  const NoiseMetrics parallel = measure_noise(
      sample, f.rules, f.corpus.registry, StopwordList(), 4);
  EXPECT_EQ(audit_sites_csv(parallel), audit_sites_csv(m));
  EXPECT_EQ(parallel.text_divergence, m.text_divergence);
}

TEST(DecideTest, StrictThresholds) {
  NoiseMetrics m;
  m.link_noise = 0.05;
  m.token_noise = 0.0500001;
  m.text_divergence = 0.2;
  NoiseThresholds t;
  t.text_divergence = 0.3;
  SliceRecommendation r = decide(m, t);
  EXPECT_EQ(r.decision, Decision::kSlice);
  EXPECT_EQ(r.triggered_by, std::vector<NoiseMetric>{NoiseMetric::kTokenNoise});
  t.token_noise = 1.0;
  r = decide(m, t);
  EXPECT_EQ(r.decision, Decision::kKeep);
  EXPECT_TRUE(r.triggered_by.empty());
  t.link_noise = -0.1;
  EXPECT_THROW(decide(m, t), Error);
}

TEST(DecideTest, MonotoneInThresholds) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 0.2);
  for (int trial = 0; trial < 500; ++trial) {
    NoiseMetrics m;
    m.link_noise = u(rng);
    m.token_noise = u(rng);
    m.text_divergence = u(rng);
    NoiseThresholds lo{u(rng), u(rng), u(rng)};
    NoiseThresholds hi{lo.link_noise + u(rng), lo.token_noise + u(rng),
                       lo.text_divergence + u(rng)};
    if (decide(m, hi).decision == Decision::kSlice) {
      EXPECT_EQ(decide(m, lo).decision, Decision::kSlice);
    }
  }
}

TEST(AuditReportTest, CsvLayout) {
  const NoiseFixture f = noise_fixture();
  NoiseMetrics m = measure_noise(sample_corpus(f.corpus, 2, 7), f.rules,
                                 f.corpus.registry, StopwordList());
  m.seed = 7;
  const SliceRecommendation r = decide(m, NoiseThresholds{});
  const std::string csv = audit_csv(m, r);
  EXPECT_EQ(csv.rfind("metric,value,threshold,triggered\n", 0), 0u);
  EXPECT_NE(csv.find("\nlink_noise,"), std::string::npos);
  EXPECT_NE(csv.find("decision,slice"), std::string::npos);
  EXPECT_NE(csv.find("seed,7"), std::string::npos);
  EXPECT_NE(audit_text(m, r).find("link_noise"), std::string::npos);
}

}  // namespace
}  // namespace nocomments
