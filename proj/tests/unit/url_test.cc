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

#include "nocomments/url.h"

#include <gtest/gtest.h>

namespace nocomments {
namespace {

TEST(UrlTest, Normalizes) {
  EXPECT_EQ(normalize_url("HTTP://www.Example.org/Post?id=1#top"),
            "example.org/Post?id=1");
  EXPECT_EQ(normalize_url("https://example.org/"), "example.org");
  EXPECT_EQ(normalize_url("//WWW.example.org/a/"), "example.org/a");
  EXPECT_EQ(normalize_url("example.org"), "example.org");
}

TEST(UrlTest, NormalizeIsIdempotent) {
  for (const char* url : {"https://www.A.org/x/?q=1#f", "//b.org", "c.org/",
                          "http://d.org:8080/p"}) {
    const std::string once = normalize_url(url);
    EXPECT_EQ(normalize_url(once), once) << url;
  }
}

TEST(UrlTest, AbsoluteWebUrls) {
  EXPECT_TRUE(is_absolute_web_url("http://a.org"));
  EXPECT_TRUE(is_absolute_web_url("HTTPS://a.org/x"));
  EXPECT_TRUE(is_absolute_web_url("//a.org/x"));
  EXPECT_FALSE(is_absolute_web_url("/x/y"));
  EXPECT_FALSE(is_absolute_web_url("page.html"));
  EXPECT_FALSE(is_absolute_web_url("mailto:me@a.org"));
  EXPECT_FALSE(is_absolute_web_url("javascript:void(0)"));
  EXPECT_FALSE(is_absolute_web_url("#top"));
}

}  // namespace
}  // namespace nocomments
