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

#ifndef NOCOMMENTS_LINKGRAPH_H_
#define NOCOMMENTS_LINKGRAPH_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nocomments/corpus.h"
#include "nocomments/slicer.h"

namespace nocomments {

enum class LinkLocation { kMain, kCommentSection };

// "main" / "comment", the spelling used in edge tables.
std::string_view to_string(LinkLocation location);
std::optional<LinkLocation> link_location_from_string(std::string_view s);

// A hyperlink from a page of one registered site to another registered site.
struct Edge {
  std::string src_site;
  std::string dst_site;
  LinkLocation location = LinkLocation::kMain;
  std::string src_page;
  std::string url;

  bool is_self() const { return src_site == dst_site; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// An href attribute value found in an anchor tag, with the byte offset of the
// value's first byte.
struct Href {
  std::size_t offset = 0;
  std::string value;

  friend bool operator==(const Href&, const Href&) = default;
};

struct LinkDiagnostics {
  std::size_t anchors = 0;
  std::size_t malformed = 0;
  std::size_t relative = 0;
  std::size_t external = 0;

  void merge(const LinkDiagnostics& other);
};

// Byte-level scan for <a ... href=...> with double, single or no quotes. Tag
// and attribute names are case-insensitive. Anchors whose tag or quoted value
// never terminates are counted in *malformed and skipped.
std::vector<Href> scan_hrefs(std::string_view html,
                             std::size_t* malformed = nullptr);

// One Edge per absolute href that resolves to a registered site. The location
// is CommentSection iff the href value's offset lies inside a comment section.
std::vector<Edge> extract_links(const Page& page, const SlicedPage& sliced,
                                const SiteRegistry& registry,
                                LinkDiagnostics* diagnostics = nullptr);

// edges.csv: src_site,dst_site,location,src_page,url
std::string edges_csv(const std::vector<Edge>& edges);
std::vector<Edge> parse_edges_csv(std::string_view text,
                                  std::string_view source_name = "<edges>");

struct CrossTabRow {
  std::string src_label;
  std::string dst_label;
  std::size_t outside = 0;
  std::size_t inside = 0;
  // inside / (inside + outside), full precision.
  double proportion = 0.0;

  friend bool operator==(const CrossTabRow&, const CrossTabRow&) = default;
};

// Counts non-self edges per (source label, destination label); Main edges
// are outside, CommentSection edges inside. Rows are sorted by proportion
// descending (compared exactly), then by label pair. Throws Error if an edge
// names a site missing from the registry.
std::vector<CrossTabRow> crosstab(const std::vector<Edge>& edges,
                                  const SiteRegistry& registry);

// Two decimals, dot separator, halves rounded away from zero.
std::string format_proportion(double proportion);

// src_label,dst_label,outside,inside,proportion
std::string crosstab_csv(const std::vector<CrossTabRow>& rows);

// Site-level graph of reciprocated links.
struct MutualGraph {
  std::set<std::string> nodes;
  // Undirected edges stored as (a, b) with a < b.
  std::set<std::pair<std::string, std::string>> edges;

  bool has_edge(const std::string& a, const std::string& b) const;
};

// Every registry site is a node. With include_comments false only Main edges
// are considered. {a, b} is an edge iff a->b and b->a both survive the
// filter; self-links never do.
MutualGraph mutual_graph(const std::vector<Edge>& edges, bool include_comments,
                         const SiteRegistry& registry);

// Connected components with sorted members, ordered by size descending then
// by smallest member.
std::vector<std::vector<std::string>> components(const MutualGraph& graph);

// component,site_id,label with component numbered from 0 in components()
// order.
std::string components_csv(const std::vector<std::vector<std::string>>& comps,
                           const SiteRegistry& registry);

}  // namespace nocomments

#endif  // NOCOMMENTS_LINKGRAPH_H_
