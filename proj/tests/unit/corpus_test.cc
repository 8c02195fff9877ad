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

#include "nocomments/corpus.h"

#include <ostream>

#include <gtest/gtest.h>

#include "nocomments/error.h"
#include "nocomments/outputs.h"
#include "support/test_support.h"

namespace nocomments {
namespace {

using ::nocomments::testing::TempDir;

SiteRegistry two_sites() {
  SiteRegistry registry;
  registry.add({"a", "MIRA", {"a.org", "blog.b.org/a"}});
  registry.add({"b", "SIRE", {"b.org"}});
  return registry;
}

TEST(SiteRegistryTest, ResolvesLongestPrefixOnBoundary) {
  const SiteRegistry r = two_sites();
  EXPECT_EQ(r.resolve_url("https://www.a.org/post/1"), "a");
  EXPECT_EQ(r.resolve_url("http://A.ORG"), "a");
  EXPECT_EQ(r.resolve_url("http://a.org?x=1"), "a");
  EXPECT_EQ(r.resolve_url("http://blog.b.org/a/entry"), "a");
  EXPECT_EQ(r.resolve_url("http://b.org/a/entry"), "b");
  EXPECT_EQ(r.resolve_url("http://b.org:8080/"), "b");
  EXPECT_FALSE(r.resolve_url("http://a.org.net/").has_value());
  EXPECT_FALSE(r.resolve_url("http://blog.b.org/ab").has_value());
  EXPECT_FALSE(r.resolve_url("http://c.org/").has_value());
}

TEST(SiteRegistryTest, RejectsBadSites) {
  SiteRegistry r = two_sites();
  EXPECT_THROW(r.add({"a", "X", {"z.org"}}), Error);
  EXPECT_THROW(r.add({"c", "X", {}}), Error);
  EXPECT_THROW(r.add({"", "X", {"z.org"}}), Error);
  EXPECT_THROW(r.add({"c", "X", {"https://www.b.org/"}}), Error);
}

TEST(CorpusTest, LoadsPagesByteForByte) {
  TempDir dir;
  const std::string raw("<p>caf\xC3\xA9\r\n\0binary</p>", 22);
  write_file(dir / "root/a/index.html", raw);
  write_file(dir / "m.csv",
             "site_id,label,page_path,url_prefixes\n"
             "a,MIRA,a/index.html,a.org|www.a.net\n"
             "b,SIRE,,b.org\n");
  const Corpus corpus = load_corpus(dir / "root", dir / "m.csv");
  ASSERT_EQ(corpus.pages.size(), 1u);
  EXPECT_EQ(corpus.pages[0].raw_bytes, raw);
  EXPECT_EQ(corpus.registry.size(), 2u);
  EXPECT_EQ(corpus.registry.find("a")->url_prefixes.size(), 2u);
  EXPECT_NE(corpus.find_page("a", "a/index.html"), nullptr);
  EXPECT_EQ(corpus.find_page("b", "a/index.html"), nullptr);
}

TEST(CorpusTest, ColumnsLocatedByName) {
  TempDir dir;
  write_file(dir / "root/p.html", "x");
  write_file(dir / "m.csv",
             "url_prefixes,page_path,label,site_id\n"
             "a.org,p.html,L,a\n");
  EXPECT_EQ(load_corpus(dir / "root", dir / "m.csv").pages[0].site_id, "a");
}

TEST(CorpusTest, LaterRowsInheritSiteFields) {
  TempDir dir;
  write_file(dir / "root/a/1.html", "1");
  write_file(dir / "root/a/2.html", "2");
  write_file(dir / "m.csv",
             "site_id,label,page_path,url_prefixes\n"
             "a,L,a/1.html,a.org\n"
             "a,,a/2.html,\n");
  const Corpus corpus = load_corpus(dir / "root", dir / "m.csv");
  EXPECT_EQ(corpus.pages.size(), 2u);
  EXPECT_EQ(corpus.registry.find("a")->label, "L");
}

struct BadManifest {
  const char* name;
  const char* body;
  const char* message_part;
};

void PrintTo(const BadManifest& m, std::ostream* os) { *os << m.name; }

class BadManifestTest : public ::testing::TestWithParam<BadManifest> {};

TEST_P(BadManifestTest, Fails) {
  TempDir dir;
  write_file(dir / "root/p.html", "x");
  write_file(dir / "m.csv", GetParam().body);
  try {
    load_corpus(dir / "root", dir / "m.csv");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find(GetParam().message_part),
              std::string::npos)
        << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Manifest, BadManifestTest,
    ::testing::Values(
        BadManifest{"MissingColumn", "site_id,label,page_path\na,L,p.html\n",
                    "url_prefixes"},
        BadManifest{"MissingFile",
                    "site_id,label,page_path,url_prefixes\na,L,q.html,a.org\n",
                    "q.html"},
        BadManifest{"Duplicate",
                    "site_id,label,page_path,url_prefixes\n"
                    "a,L,p.html,a.org\na,L,p.html,a.org\n",
                    "p.html"},
        BadManifest{"Escape",
                    "site_id,label,page_path,url_prefixes\na,L,../p.html,a.org\n",
                    "below the corpus root"},
        BadManifest{"LabelConflict",
                    "site_id,label,page_path,url_prefixes\n"
                    "a,L,p.html,a.org\na,M,,\n",
                    "conflicting labels"},
        BadManifest{"Unregistered",
                    "site_id,label,page_path,url_prefixes\na,L,p.html,\n",
                    "not registered"}),
    [](const auto& info) { return std::string(info.param.name); });

TEST(CorpusTest, MissingRootNamesPath) {
  TempDir dir;
  write_file(dir / "m.csv", "site_id,label,page_path,url_prefixes\n");
  try {
    load_corpus(dir / "nowhere", dir / "m.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("nowhere"), std::string::npos);
  }
}

TEST(CorpusTest, ManifestRoundTrip) {
  TempDir dir;
  write_file(dir / "root/a/1.html", "1");
  write_file(dir / "root/b/1.html", "b");
  write_file(dir / "m.csv",
             "site_id,label,page_path,url_prefixes\n"
             "a,L,a/1.html,a.org|a.net/x\n"
             "b,\"M, N\",b/1.html,b.org\n"
             "c,L,,c.org\n");
  const Corpus first = load_corpus(dir / "root", dir / "m.csv");
  write_file(dir / "m2.csv", write_manifest(first));
  const Corpus second = load_corpus(dir / "root", dir / "m2.csv");
  EXPECT_EQ(write_manifest(second), write_manifest(first));
  ASSERT_EQ(second.registry.size(), 3u);
  EXPECT_EQ(second.registry.find("b")->label, "M, N");
  EXPECT_EQ(second.registry.find("a")->url_prefixes,
            first.registry.find("a")->url_prefixes);
}

}  // namespace
}  // namespace nocomments
