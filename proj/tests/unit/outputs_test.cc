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

#include "nocomments/outputs.h"

#include <algorithm>

#include <gtest/gtest.h>

#include "json.hpp"
#include "nocomments/error.h"
#include "support/test_support.h"

namespace nocomments {
namespace {

TEST(OutputsTest, SectionFileName) {
  EXPECT_EQ(section_file_name("site/a.html", 0), "site/a.section-0.html");
  EXPECT_EQ(section_file_name("site/dir.v2/page", 3),
            "site/dir.v2/page.section-3.html");
  EXPECT_EQ(section_file_name("a.b.htm", 1), "a.b.section-1.html");
}

TEST(OutputsTest, WriteAndReadBinary) {
  testing::TempDir dir;
  const std::string bytes("a\0\r\n\xFF", 5);
  write_file(dir / "x/y/z.bin", bytes);
  EXPECT_EQ(read_file(dir / "x/y/z.bin"), bytes);
  EXPECT_THROW(read_file(dir / "missing"), Error);
}

TEST(OutputsTest, CommentsJsonlUsesNullForAbsentFields) {
  Comment c;
  c.site_id = "s";
  c.page_path = "s/p.html";
  c.section = 1;
  c.index = 2;
  c.span = {10, 20};
  c.author = "Zo\xC3\xA9 \"Z\"";
  c.depth = 3;
  c.text = "bad \xFF byte";
  const std::string out = comments_jsonl({c, c});
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 2);
  const auto j = nlohmann::json::parse(out.substr(0, out.find('\n')));
  EXPECT_EQ(j["author"], "Zo\xC3\xA9 \"Z\"");
  EXPECT_TRUE(j["date"].is_null());
  EXPECT_TRUE(j["author_url"].is_null());
  EXPECT_EQ(j["depth"], 3);
  EXPECT_EQ(j["section"], 1);
  EXPECT_EQ(j["span_start"], 10);
  EXPECT_TRUE(j["text"].is_string());
}

TEST(OutputsTest, DocumentsJsonl) {
  const std::string out =
      documents_jsonl({{"s", "s/p.html", {"un", "deux"}}, {"t", "t/q", {}}});
  EXPECT_EQ(out,
            "{\"site_id\":\"s\",\"page_path\":\"s/p.html\",\"tokens\":"
            "[\"un\",\"deux\"]}\n"
            "{\"site_id\":\"t\",\"page_path\":\"t/q\",\"tokens\":[]}\n");
}

}  // namespace
}  // namespace nocomments
