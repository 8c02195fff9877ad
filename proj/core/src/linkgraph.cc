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

#include "nocomments/linkgraph.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <tuple>

#include "nocomments/csv.h"
#include "nocomments/error.h"
#include "nocomments/url.h"

namespace nocomments {

std::string_view to_string(LinkLocation location) {
  return location == LinkLocation::kMain ? "main" : "comment";
}

std::optional<LinkLocation> link_location_from_string(std::string_view s) {
  if (s == "main") return LinkLocation::kMain;
  if (s == "comment") return LinkLocation::kCommentSection;
  return std::nullopt;
}

void LinkDiagnostics::merge(const LinkDiagnostics& other) {
  anchors += other.anchors;
  malformed += other.malformed;
  relative += other.relative;
  external += other.external;
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
}

char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ascii_lower(a[i]) != b[i]) return false;
  }
  return true;
}

enum class TagScan { kOk, kMalformed };

// Parses the attributes of a tag whose name ends just before 'pos'. On
// success 'pos' is left one past the closing '>'.
TagScan scan_anchor_attributes(std::string_view html, std::size_t& pos,
                               std::optional<Href>& href) {
  const std::size_t n = html.size();
  while (true) {
    while (pos < n && is_space(html[pos])) ++pos;
    if (pos >= n) return TagScan::kMalformed;
    if (html[pos] == '>') {
      ++pos;
      return TagScan::kOk;
    }
    if (html[pos] == '/') {
      ++pos;
      continue;
    }
    const std::size_t name_start = pos;
    while (pos < n && !is_space(html[pos]) && html[pos] != '=' &&
           html[pos] != '>' && html[pos] != '/') {
      ++pos;
    }
    const std::string_view name = html.substr(name_start, pos - name_start);
    while (pos < n && is_space(html[pos])) ++pos;
    if (pos >= n) return TagScan::kMalformed;
    if (html[pos] != '=') continue;
    ++pos;
    while (pos < n && is_space(html[pos])) ++pos;
    if (pos >= n) return TagScan::kMalformed;

    std::size_t value_start = pos;
    std::size_t value_end = pos;
    if (html[pos] == '"' || html[pos] == '\'') {
      const char quote = html[pos];
      value_start = pos + 1;
      value_end = html.find(quote, value_start);
      if (value_end == std::string_view::npos) return TagScan::kMalformed;
      pos = value_end + 1;
    } else {
      while (pos < n && !is_space(html[pos]) && html[pos] != '>') ++pos;
      value_end = pos;
    }
    if (!href && iequals(name, "href")) {
      href = Href{value_start,
                  std::string(html.substr(value_start, value_end - value_start))};
    }
  }
}

}  // namespace

std::vector<Href> scan_hrefs(std::string_view html, std::size_t* malformed) {
  std::vector<Href> out;
  std::size_t bad = 0;
  std::size_t i = 0;
  const std::size_t n = html.size();
  while ((i = html.find('<', i)) != std::string_view::npos) {
    const bool anchor = i + 1 < n && ascii_lower(html[i + 1]) == 'a' &&
                        (i + 2 == n || is_space(html[i + 2]) ||
                         html[i + 2] == '>' || html[i + 2] == '/');
    if (!anchor) {
      ++i;
      continue;
    }
    std::size_t pos = i + 2;
    std::optional<Href> href;
    if (scan_anchor_attributes(html, pos, href) == TagScan::kMalformed) {
      ++bad;
      ++i;
      continue;
    }
    if (href) out.push_back(std::move(*href));
    i = pos;
  }
  if (malformed) *malformed += bad;
  return out;
}

std::vector<Edge> extract_links(const Page& page, const SlicedPage& sliced,
                                const SiteRegistry& registry,
                                LinkDiagnostics* diagnostics) {
  if (sliced.site_id != page.site_id || sliced.page_path != page.page_path ||
      sliced.length != page.raw_bytes.size()) {
    throw Error("sliced page does not correspond to " + page.site_id + "/" +
                page.page_path);
  }
  LinkDiagnostics diag;
  const std::vector<Href> hrefs = scan_hrefs(page.raw_bytes, &diag.malformed);
  diag.anchors = hrefs.size();

  std::vector<Edge> edges;
  for (const Href& href : hrefs) {
    if (!is_absolute_web_url(href.value)) {
      ++diag.relative;
      continue;
    }
    std::optional<std::string> dst = registry.resolve_url(href.value);
    if (!dst) {
      ++diag.external;
      continue;
    }
    edges.push_back(Edge{page.site_id, std::move(*dst),
                         sliced.in_comment_section(href.offset)
                             ? LinkLocation::kCommentSection
                             : LinkLocation::kMain,
                         page.page_path, href.value});
  }
  if (diagnostics) diagnostics->merge(diag);
  return edges;
}

std::string edges_csv(const std::vector<Edge>& edges) {
  std::string out = "src_site,dst_site,location,src_page,url\n";
  for (const Edge& e : edges) {
    csv::append_row(out,
                    {e.src_site, e.dst_site, to_string(e.location), e.src_page,
                     e.url});
  }
  return out;
}

std::vector<Edge> parse_edges_csv(std::string_view text,
                                  std::string_view source_name) {
  const csv::Table table = csv::parse_table(text, source_name);
  const csv::Row expected{"src_site", "dst_site", "location", "src_page",
                          "url"};
  if (table.header != expected) {
    throw Error(std::string(source_name) +
                ": header must be src_site,dst_site,location,src_page,url");
  }
  std::vector<Edge> edges;
  edges.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const csv::Row& row = table.rows[i];
    const auto location = link_location_from_string(row[2]);
    if (!location) {
      throw Error(std::string(source_name) + ":" +
                  std::to_string(table.line_numbers[i]) +
                  ": location must be 'main' or 'comment', got '" + row[2] +
                  "'");
    }
    edges.push_back(Edge{row[0], row[1], *location, row[3], row[4]});
  }
  return edges;
}

std::vector<CrossTabRow> crosstab(const std::vector<Edge>& edges,
                                  const SiteRegistry& registry) {
  std::map<std::pair<std::string, std::string>, CrossTabRow> cells;
  auto label_of = [&](const std::string& site_id) -> const std::string& {
    const Site* site = registry.find(site_id);
    if (!site) throw Error("edge references unknown site '" + site_id + "'");
    return site->label;
  };
  for (const Edge& edge : edges) {
    if (edge.is_self()) continue;
    const std::string& src = label_of(edge.src_site);
    const std::string& dst = label_of(edge.dst_site);
    CrossTabRow& row = cells[{src, dst}];
    row.src_label = src;
    row.dst_label = dst;
    if (edge.location == LinkLocation::kCommentSection) {
      ++row.inside;
    } else {
      ++row.outside;
    }
  }

  std::vector<CrossTabRow> rows;
  rows.reserve(cells.size());
  for (auto& [key, row] : cells) {
    row.proportion = static_cast<double>(row.inside) /
                     static_cast<double>(row.inside + row.outside);
    rows.push_back(std::move(row));
  }
  // inside_a / total_a > inside_b / total_b, compared without rounding.
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CrossTabRow& a, const CrossTabRow& b) {
                     const auto lhs = static_cast<unsigned __int128>(a.inside) *
                                      (b.inside + b.outside);
                     const auto rhs = static_cast<unsigned __int128>(b.inside) *
                                      (a.inside + a.outside);
                     if (lhs != rhs) return lhs > rhs;
                     return std::tie(a.src_label, a.dst_label) <
                            std::tie(b.src_label, b.dst_label);
                   });
  return rows;
}

std::string format_proportion(double proportion) {
  const long long hundredths = std::llround(proportion * 100.0);
  std::string out = std::to_string(hundredths / 100) + ".";
  const long long rest = hundredths % 100;
  if (rest < 10) out.push_back('0');
  out += std::to_string(rest);
  return out;
}

std::string crosstab_csv(const std::vector<CrossTabRow>& rows) {
  std::string out = "src_label,dst_label,outside,inside,proportion\n";
  for (const CrossTabRow& row : rows) {
    csv::append_row(out, {row.src_label, row.dst_label,
                          std::to_string(row.outside),
                          std::to_string(row.inside),
                          format_proportion(row.proportion)});
  }
  return out;
}

bool MutualGraph::has_edge(const std::string& a, const std::string& b) const {
  return a < b ? edges.contains({a, b}) : edges.contains({b, a});
}

MutualGraph mutual_graph(const std::vector<Edge>& edges, bool include_comments,
                         const SiteRegistry& registry) {
  MutualGraph graph;
  for (const Site& site : registry.sites()) graph.nodes.insert(site.site_id);

  std::set<std::pair<std::string, std::string>> directed;
  for (const Edge& edge : edges) {
    if (edge.is_self()) continue;
    if (!include_comments && edge.location != LinkLocation::kMain) continue;
    graph.nodes.insert(edge.src_site);
    graph.nodes.insert(edge.dst_site);
    directed.emplace(edge.src_site, edge.dst_site);
  }
  for (const auto& [src, dst] : directed) {
    if (src < dst && directed.contains({dst, src})) graph.edges.emplace(src, dst);
  }
  return graph;
}

std::vector<std::vector<std::string>> components(const MutualGraph& graph) {
  std::map<std::string, std::vector<std::string>> adjacency;
  for (const std::string& node : graph.nodes) adjacency[node];
  for (const auto& [a, b] : graph.edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }

  std::set<std::string> visited;
  std::vector<std::vector<std::string>> out;
  for (const auto& [start, unused] : adjacency) {
    if (visited.contains(start)) continue;
    std::vector<std::string> members;
    std::deque<std::string> queue{start};
    visited.insert(start);
    while (!queue.empty()) {
      std::string node = std::move(queue.front());
      queue.pop_front();
      for (const std::string& next : adjacency[node]) {
        if (visited.insert(next).second) queue.push_back(next);
      }
      members.push_back(std::move(node));
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

std::string components_csv(const std::vector<std::vector<std::string>>& comps,
                           const SiteRegistry& registry) {
  std::string out = "component,site_id,label\n";
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::string index = std::to_string(c);
    for (const std::string& id : comps[c]) {
      const Site* site = registry.find(id);
      csv::append_row(out, {index, id, site ? site->label : ""});
    }
  }
  return out;
}

}  // namespace nocomments
