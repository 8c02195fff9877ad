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

#include "nocomments/textstats.h"

#include <cmath>
#include <map>
#include <random>
#include <set>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "nocomments/error.h"
#include "nocomments/utf8.h"

namespace nocomments {
namespace {

using ::testing::ElementsAre;

TEST(Utf8Test, LossyDecodeReplacesBadBytes) {
  const std::u32string s = utf8::decode_lossy("a\xC3\xA9\xFFz\xE2\x82");
  EXPECT_EQ(s, (std::u32string{U'a', U'\u00E9', utf8::kReplacement, U'z',
                               utf8::kReplacement}));
  EXPECT_EQ(utf8::encode(U"\u00C9t\u00E9"), "\xC3\x89t\xC3\xA9");
}

TEST(Utf8Test, LettersAndCase) {
  EXPECT_TRUE(utf8::is_letter(U'\u00E9'));
  EXPECT_TRUE(utf8::is_letter(U'\u0153'));
  EXPECT_FALSE(utf8::is_letter(U'-'));
  EXPECT_FALSE(utf8::is_letter(U'\u2019'));
  EXPECT_EQ(utf8::to_lower(U'\u00C9'), U'\u00E9');
  EXPECT_EQ(utf8::to_lower(U'\u0152'), U'\u0153');
}

TEST(VisibleTextTest, DropsMarkupScriptsAndDecodesEntities) {
  EXPECT_EQ(visible_text("<p>a<b>b</b></p><script>var x='<p>';</script>"
                         "<!-- hidden -->c&amp;d&eacute;&#233;&#xE9;&nbsp;"),
            " a b    c&d\xC3\xA9\xC3\xA9\xC3\xA9\xC2\xA0");
  EXPECT_EQ(visible_text("x<STYLE>p{}</STYLE>y"), "x y");
  EXPECT_EQ(visible_text("&unknown; &#xZZ;"), "&unknown; &#xZZ;");
}

TEST(TokenizeTest, FrenchText) {
  const StopwordList fr = StopwordList::french();
  EXPECT_THAT(tokenize("<p>L'Hiver dernier, les VACCINS étaient 2021 "
                       "l&#233;gaux&nbsp;!</p>", fr),
              ElementsAre("hiver", "dernier", "vaccins", "légaux"));
}

TEST(TokenizeTest, KeepsMixedAlphanumericAndDropsShort) {
  const StopwordList none;
  EXPECT_THAT(tokenize("covid19 a 42 x2 b-c", none), ElementsAre("covid19", "x2"));
}

TEST(TokenizeTest, PiecesDoNotGlue) {
  const StopwordList none;
  EXPECT_THAT(tokenize_pieces({"vac", "cin"}, none), ElementsAre("vac", "cin"));
  EXPECT_THAT(tokenize_pieces({"<p", "x>mot"}, none), ElementsAre("mot"));
}

TEST(StopwordListTest, ParsesAndLowercases) {
  const StopwordList list =
      StopwordList::parse("# header\nLe\n\n  la \nÉTÉ\n", "fr");
  EXPECT_TRUE(list.contains("le"));
  EXPECT_TRUE(list.contains("la"));
  EXPECT_TRUE(list.contains("été"));
  EXPECT_EQ(list.size(), 3u);
  EXPECT_GT(StopwordList::french().size(), 100u);
  EXPECT_TRUE(StopwordList::french().contains("les"));
}

TEST(TokenTableTest, RankingAndTopK) {
  TokenTable t;
  t.add(std::vector<std::string>{"b", "a", "c", "b", "a", "d"});
  t.add("c", 3);
  EXPECT_EQ(t.total, 9u);
  EXPECT_THAT(ranked(t), ElementsAre(TokenCount{"c", 4}, TokenCount{"a", 2},
                                     TokenCount{"b", 2}, TokenCount{"d", 1}));
  EXPECT_EQ(top_k(t, 2).size(), 2u);
  EXPECT_EQ(top_k(t, 10).size(), 4u);
  EXPECT_THROW(top_k(t, 0), Error);
  EXPECT_EQ(frequency_csv(t, 2), "token,count\nc,4\na,2\n");
}

TEST(TokenTableTest, FrequencyTableMergesDocuments) {
  const TokenTable t = frequency_table({{"x", "y"}, {"y"}, {}});
  EXPECT_EQ(t.count("y"), 2u);
  EXPECT_EQ(t.count("z"), 0u);
  TokenTable a;
  a.add("x");
  TokenTable b;
  b.add("y", 2);
  a.merge(b);
  EXPECT_EQ(a, t);
}

TEST(DivergenceTest, FrozenValue) {
  TokenTable p;
  p.add("a");
  TokenTable q;
  q.add("a");
  q.add("b");
  EXPECT_DOUBLE_EQ(frequency_divergence(p, q), 0.31127812445913283);
}

TEST(DivergenceTest, EdgeCases) {
  TokenTable a;
  a.add("a", 5);
  TokenTable b;
  b.add("b", 2);
  EXPECT_DOUBLE_EQ(frequency_divergence(a, b), 1.0);
  EXPECT_DOUBLE_EQ(frequency_divergence(a, a), 0.0);
  EXPECT_DOUBLE_EQ(frequency_divergence(a, TokenTable{}), 1.0);
  EXPECT_THROW(frequency_divergence(TokenTable{}, TokenTable{}), Error);
}

// Textbook definition in natural log, converted at the end.
double reference_jsd(const std::map<std::string, double>& p,
                     const std::map<std::string, double>& q) {
  double sp = 0;
  double sq = 0;
  for (const auto& [k, v] : p) sp += v;
  for (const auto& [k, v] : q) sq += v;
  std::set<std::string> keys;
  for (const auto& [k, v] : p) keys.insert(k);
  for (const auto& [k, v] : q) keys.insert(k);
  double kl_p = 0;
  double kl_q = 0;
  for (const std::string& k : keys) {
    const double pi = p.contains(k) ? p.at(k) / sp : 0;
    const double qi = q.contains(k) ? q.at(k) / sq : 0;
    const double m = (pi + qi) / 2;
    if (pi > 0) kl_p += pi * std::log(pi / m);
    if (qi > 0) kl_q += qi * std::log(qi / m);
  }
  return (kl_p + kl_q) / 2 / std::log(2.0);
}

TEST(DivergenceTest, MatchesReferenceOnRandomTables) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    TokenTable a;
    TokenTable b;
    std::map<std::string, double> pa;
    std::map<std::string, double> pb;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 20); ++i) {
      const std::string tok = "t" + std::to_string(rng() % 15);
      const std::uint64_t n = 1 + rng() % 50;
      if (rng() % 2) {
        a.add(tok, n);
        pa[tok] += static_cast<double>(n);
      } else {
        b.add(tok, n);
        pb[tok] += static_cast<double>(n);
      }
    }
    if (a.empty() || b.empty()) continue;
    const double d = frequency_divergence(a, b);
    EXPECT_NEAR(d, reference_jsd(pa, pb), 1e-12);
    EXPECT_DOUBLE_EQ(d, frequency_divergence(b, a));
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
  }
}

}  // namespace
}  // namespace nocomments
