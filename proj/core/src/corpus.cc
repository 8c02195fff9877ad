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

#include <algorithm>
#include <set>
#include <utility>

#include "nocomments/csv.h"
#include "nocomments/error.h"
#include "nocomments/outputs.h"
#include "nocomments/url.h"

namespace nocomments {

void SiteRegistry::add(Site site) {
  if (site.site_id.empty()) throw Error("site with empty site_id");
  if (index_by_id_.contains(site.site_id)) {
    throw Error("duplicate site_id '" + site.site_id + "'");
  }
  if (site.url_prefixes.empty()) {
    throw Error("site '" + site.site_id + "' has no url prefix");
  }
  const std::size_t index = sites_.size();
  std::vector<std::string> normalized;
  for (const std::string& prefix : site.url_prefixes) {
    std::string key = normalize_url(prefix);
    if (key.empty()) {
      throw Error("site '" + site.site_id + "' has an empty url prefix");
    }
    if (auto it = owner_by_prefix_.find(key);
        it != owner_by_prefix_.end() && it->second != index) {
      throw Error("url prefix '" + prefix + "' is owned by both '" +
                  sites_[it->second].site_id + "' and '" + site.site_id + "'");
    }
    normalized.push_back(std::move(key));
  }
  for (std::string& key : normalized) owner_by_prefix_.emplace(std::move(key), index);
  index_by_id_.emplace(site.site_id, index);
  sites_.push_back(std::move(site));
}

const Site* SiteRegistry::find(std::string_view site_id) const {
  auto it = index_by_id_.find(std::string(site_id));
  return it == index_by_id_.end() ? nullptr : &sites_[it->second];
}

std::optional<std::string> SiteRegistry::resolve_url(
    std::string_view url) const {
  const std::string normalized = normalize_url(url);
  for (std::size_t len = normalized.size(); len > 0; --len) {
    if (len < normalized.size()) {
      const char next = normalized[len];
      if (next != '/' && next != '?' && next != ':') continue;
    }
    auto it = owner_by_prefix_.find(normalized.substr(0, len));
    if (it != owner_by_prefix_.end()) return sites_[it->second].site_id;
  }
  return std::nullopt;
}

const Page* Corpus::find_page(std::string_view site_id,
                              std::string_view page_path) const {
  auto it = std::find_if(pages.begin(), pages.end(), [&](const Page& p) {
    return p.site_id == site_id && p.page_path == page_path;
  });
  return it == pages.end() ? nullptr : &*it;
}

namespace {

struct ManifestRow {
  std::string site_id;
  std::string label;
  std::string page_path;
  std::vector<std::string> url_prefixes;
  std::size_t line = 0;
};

std::vector<std::string> split_prefixes(std::string_view cell) {
  std::vector<std::string> out;
  while (true) {
    const std::size_t bar = cell.find('|');
    std::string_view part = cell.substr(0, bar);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) out.emplace_back(part);
    if (bar == std::string_view::npos) break;
    cell.remove_prefix(bar + 1);
  }
  return out;
}

std::vector<ManifestRow> read_manifest(const std::filesystem::path& manifest) {
  if (!std::filesystem::is_regular_file(manifest)) {
    throw Error("manifest not found: " + manifest.string());
  }
  const csv::Table table = csv::read_table(manifest);
  auto column = [&](std::string_view name) {
    auto it = std::find(table.header.begin(), table.header.end(), name);
    if (it == table.header.end()) {
      throw Error(manifest.string() + ": header lacks column '" +
                  std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - table.header.begin());
  };
  const std::size_t site_col = column("site_id");
  const std::size_t label_col = column("label");
  const std::size_t path_col = column("page_path");
  const std::size_t prefix_col = column("url_prefixes");

  std::vector<ManifestRow> rows;
  rows.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const csv::Row& r = table.rows[i];
    ManifestRow row{r[site_col], r[label_col], r[path_col],
                    split_prefixes(r[prefix_col]), table.line_numbers[i]};
    if (row.site_id.empty()) {
      throw Error(manifest.string() + ":" + std::to_string(row.line) +
                  ": empty site_id");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SiteRegistry registry_from_rows(const std::vector<ManifestRow>& rows,
                                const std::filesystem::path& manifest) {
  std::vector<Site> sites;
  std::unordered_map<std::string, std::size_t> seen;
  for (const ManifestRow& row : rows) {
    auto where = [&] {
      return manifest.string() + ":" + std::to_string(row.line) + ": site '" +
             row.site_id + "'";
    };
    auto it = seen.find(row.site_id);
    if (it == seen.end()) {
      seen.emplace(row.site_id, sites.size());
      sites.push_back(Site{row.site_id, row.label, row.url_prefixes});
      continue;
    }
    Site& site = sites[it->second];
    if (site.label.empty()) site.label = row.label;
    if (!row.label.empty() && site.label != row.label) {
      throw Error(where() + " has conflicting labels '" + site.label +
                  "' and '" + row.label + "'");
    }
    if (row.url_prefixes.empty()) continue;
    if (site.url_prefixes.empty()) {
      site.url_prefixes = row.url_prefixes;
    } else if (site.url_prefixes != row.url_prefixes) {
      throw Error(where() + " has conflicting url_prefixes");
    }
  }
  SiteRegistry registry;
  for (Site& site : sites) {
    if (site.url_prefixes.empty()) {
      throw Error(manifest.string() + ": site '" + site.site_id +
                  "' is not registered: no row gives its url_prefixes");
    }
    registry.add(std::move(site));
  }
  return registry;
}

void check_page_path(const ManifestRow& row,
                     const std::filesystem::path& manifest) {
  const std::filesystem::path path(row.page_path);
  bool escapes = path.is_absolute();
  for (const auto& part : path) escapes = escapes || part == "..";
  if (escapes) {
    throw Error(manifest.string() + ":" + std::to_string(row.line) +
                ": page_path must stay below the corpus root: " +
                row.page_path);
  }
}

}  // namespace

SiteRegistry load_registry(const std::filesystem::path& manifest) {
  return registry_from_rows(read_manifest(manifest), manifest);
}

Corpus load_corpus(const std::filesystem::path& root,
                   const std::filesystem::path& manifest) {
  if (!std::filesystem::is_directory(root)) {
    throw Error("corpus root not found: " + root.string());
  }
  const std::vector<ManifestRow> rows = read_manifest(manifest);
  Corpus corpus;
  corpus.registry = registry_from_rows(rows, manifest);

  std::set<std::pair<std::string, std::string>> keys;
  for (const ManifestRow& row : rows) {
    if (row.page_path.empty()) continue;
    check_page_path(row, manifest);
    if (!keys.emplace(row.site_id, row.page_path).second) {
      throw Error(manifest.string() + ":" + std::to_string(row.line) +
                  ": duplicate page (" + row.site_id + ", " + row.page_path +
                  ")");
    }
    const std::filesystem::path file = root / row.page_path;
    if (!std::filesystem::is_regular_file(file)) {
      throw Error("page file not found: " + file.string());
    }
    corpus.pages.push_back(Page{row.site_id, row.page_path, read_file(file)});
  }
  return corpus;
}

std::string write_manifest(const Corpus& corpus) {
  std::string out = "site_id,label,page_path,url_prefixes\n";
  auto joined = [](const Site& site) {
    std::string s;
    for (std::size_t i = 0; i < site.url_prefixes.size(); ++i) {
      if (i > 0) s.push_back('|');
      s += site.url_prefixes[i];
    }
    return s;
  };
  for (const Site& site : corpus.registry.sites()) {
    const std::string prefixes = joined(site);
    csv::append_row(out, {site.site_id, site.label, "", prefixes});
  }
  for (const Page& page : corpus.pages) {
    csv::append_row(out, {page.site_id, "", page.page_path, ""});
  }
  return out;
}

}  // namespace nocomments
