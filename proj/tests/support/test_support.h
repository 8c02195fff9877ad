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

#ifndef NOCOMMENTS_TESTS_SUPPORT_TEST_SUPPORT_H_
#define NOCOMMENTS_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "nocomments/corpus.h"
#include "nocomments/encoding.h"
#include "nocomments/outputs.h"
#include "nocomments/pattern.h"

namespace nocomments::testing {

inline std::filesystem::path fixture_path(const std::string& relative) {
  return std::filesystem::path(NOCOMMENTS_FIXTURE_DIR) / relative;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::uint64_t counter = 0;
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("nocomments-test-" + std::to_string(rd()) + "-" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const {
    return path_ / rel;
  }

 private:
  std::filesystem::path path_;
};

inline EncodingRule literal_rule(const std::string& site_id,
                                 const std::string& open,
                                 const std::string& close,
                                 const std::string& label = "L") {
  EncodingRule rule;
  rule.site_id = site_id;
  rule.label = label;
  rule.has_comments = true;
  rule.open_pattern = Pattern::literal(open);
  rule.close_pattern = Pattern::literal(close);
  return rule;
}

// Writes a corpus tree plus manifest.csv and encoding.csv below 'root' and
// returns the manifest path. Sites get the prefix "<site_id>.example".
inline std::filesystem::path write_corpus(
    const std::filesystem::path& root, const Corpus& corpus,
    const EncodingFile& rules) {
  for (const Page& page : corpus.pages) {
    write_file(root / "corpus" / page.page_path, page.raw_bytes);
  }
  write_file(root / "manifest.csv", write_manifest(corpus));
  write_file(root / "encoding.csv", write_encoding(rules));
  return root / "manifest.csv";
}

// Random text over an alphabet disjoint from random_delimiter()'s, so it
// never contains a delimiter.
inline std::string filler(std::mt19937_64& rng, std::size_t max_len) {
  static const std::string kAlphabet =
      "abcdefghij klmnop\nqrstuvwxyz0123456789.,;\t\"'=/";
  const std::size_t n = rng() % (max_len + 1);
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out += kAlphabet[rng() % kAlphabet.size()];
  return out;
}

// 2-7 characters absent from filler(). The result neither contains nor is
// contained in 'avoid'.
inline std::string random_delimiter(std::mt19937_64& rng,
                                    const std::string& avoid = "") {
  static const std::string kDelimAlphabet = "<>[]{}#@!%&*ABCDEFGH";
  for (;;) {
    std::string d;
    const std::size_t n = 2 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) {
      d += kDelimAlphabet[rng() % kDelimAlphabet.size()];
    }
    if (avoid.empty() || (avoid.find(d) == std::string::npos &&
                          d.find(avoid) == std::string::npos)) {
      return d;
    }
  }
}

enum class PageShape { kNoSection, kOneSection, kMultiSection, kMissingClosure };

// Page built around literal delimiters 'open' and 'close' with the requested
// shape. Delimiters are guaranteed not to overlap each other or the filler.
inline std::string random_page(std::mt19937_64& rng, PageShape shape,
                               const std::string& open,
                               const std::string& close) {
  std::string page = filler(rng, 200);
  switch (shape) {
    case PageShape::kNoSection:
      break;
    case PageShape::kOneSection:
      page += open + filler(rng, 300) + close + filler(rng, 200);
      break;
    case PageShape::kMultiSection: {
      const std::size_t n = 2 + rng() % 4;
      for (std::size_t i = 0; i < n; ++i) {
        page += open + filler(rng, 150) + close + filler(rng, 100);
      }
      break;
    }
    case PageShape::kMissingClosure:
      page += open + filler(rng, 300);
      break;
  }
  return page;
}

}  // namespace nocomments::testing

#endif  // NOCOMMENTS_TESTS_SUPPORT_TEST_SUPPORT_H_
