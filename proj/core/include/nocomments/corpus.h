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

#ifndef NOCOMMENTS_CORPUS_H_
#define NOCOMMENTS_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nocomments {

struct Site {
  std::string site_id;
  // Free-form category, e.g. "MIRA".
  std::string label;
  std::vector<std::string> url_prefixes;
};

struct Page {
  std::string site_id;
  // Corpus-relative path, also the on-disk location below the corpus root.
  std::string page_path;
  // Stored HTML, byte for byte. Never decoded or normalized.
  std::string raw_bytes;
};

// Site table with longest-prefix URL ownership.
class SiteRegistry {
 public:
  // Throws Error on an empty or duplicate site_id, an empty prefix list, or a
  // prefix (after normalization) already owned by another site.
  void add(Site site);

  const Site* find(std::string_view site_id) const;
  const std::vector<Site>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }

  // site_id of the site owning the longest matching prefix, or nullopt when
  // the URL is external to the registry. Prefixes only match on a path
  // boundary: "a.org" owns "a.org", "a.org/x" and "a.org?q", not "a.org.net".
  std::optional<std::string> resolve_url(std::string_view url) const;

 private:
  std::vector<Site> sites_;
  std::unordered_map<std::string, std::size_t> index_by_id_;
  // Normalized prefix -> owning site index.
  std::unordered_map<std::string, std::size_t> owner_by_prefix_;
};

struct Corpus {
  SiteRegistry registry;
  std::vector<Page> pages;

  const Page* find_page(std::string_view site_id,
                        std::string_view page_path) const;
};

// Manifest: CSV with header site_id,label,page_path,url_prefixes. Each row
// with a non-empty page_path lists one page; a row with an empty page_path
// only registers its site. url_prefixes is '|'-separated. Rows for the same
// site must agree on label and prefixes; empty label or prefix cells inherit
// from the other rows. A site no row gives prefixes for is unregistered.
//
// load_registry reads only the site columns; load_corpus also reads every
// page file from root/page_path. Both throw Error naming the offending file,
// row or id.
SiteRegistry load_registry(const std::filesystem::path& manifest);
Corpus load_corpus(const std::filesystem::path& root,
                   const std::filesystem::path& manifest);

// Writes a manifest that load_registry/load_corpus read back to the same
// registry and page list.
std::string write_manifest(const Corpus& corpus);

}  // namespace nocomments

#endif  // NOCOMMENTS_CORPUS_H_
