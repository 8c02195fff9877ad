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

#ifndef NOCOMMENTS_TEXTSTATS_H_
#define NOCOMMENTS_TEXTSTATS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nocomments {

class StopwordList {
 public:
  StopwordList() = default;
  // Entries are lowercased; empty entries are dropped.
  StopwordList(const std::vector<std::string>& words, std::string language);

  // One token per line, '#' starts a comment line.
  static StopwordList parse(std::string_view text, std::string language);
  static StopwordList from_file(const std::filesystem::path& path,
                                std::string language);
  // The bundled French list.
  static StopwordList french();

  bool contains(std::string_view token) const {
    return words_.find(token) != words_.end();
  }
  const std::set<std::string, std::less<>>& words() const { return words_; }
  const std::string& language() const { return language_; }
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
  std::string language_;
};

// Markup removal over bytes: script/style blocks and <!-- --> comments are
// dropped, every other tag is replaced by a space, and character references
// (&amp;, &eacute;, &#233;, &#xE9; ...) are decoded to UTF-8.
std::string visible_text(std::string_view html);

inline constexpr std::size_t kMinTokenLength = 2;

// visible_text, lossy UTF-8 decode, lowercase, split on every character that
// is neither a letter nor a digit, then drop all-digit tokens, stopwords and
// tokens shorter than kMinTokenLength code points.
std::vector<std::string> tokenize(std::string_view html_bytes,
                                  const StopwordList& stopwords);

// tokenize() applied to each piece separately, results concatenated. Used on
// the main spans of a sliced page so no token or tag is glued together
// across a removed section.
std::vector<std::string> tokenize_pieces(
    const std::vector<std::string_view>& pieces, const StopwordList& stopwords);

struct TokenTable {
  std::map<std::string, std::uint64_t, std::less<>> counts;
  std::uint64_t total = 0;

  void add(std::string_view token, std::uint64_t n = 1);
  void add(const std::vector<std::string>& tokens);
  void merge(const TokenTable& other);
  std::uint64_t count(std::string_view token) const;
  bool empty() const { return total == 0; }

  friend bool operator==(const TokenTable&, const TokenTable&) = default;
};

TokenTable frequency_table(const std::vector<std::vector<std::string>>& docs);

using TokenCount = std::pair<std::string, std::uint64_t>;

// All entries by count descending, then token ascending.
std::vector<TokenCount> ranked(const TokenTable& table);

// The first k entries of ranked(). Throws Error if k is 0.
std::vector<TokenCount> top_k(const TokenTable& table, std::size_t k);

// Jensen-Shannon divergence in bits between the normalized tables, in
// [0, 1]. If exactly one table is empty the result is 1. Throws Error if both
// are empty.
double frequency_divergence(const TokenTable& with_comments,
                            const TokenTable& without_comments);

// token,count in ranked() order; limit 0 means every row.
std::string frequency_csv(const TokenTable& table, std::size_t limit = 0);

}  // namespace nocomments

#endif  // NOCOMMENTS_TEXTSTATS_H_
