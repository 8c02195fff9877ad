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

#include "nocomments/graph_export.h"

#include "nocomments/error.h"
#include "nocomments/outputs.h"

namespace nocomments {
namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string label_of(const SiteRegistry& registry, const std::string& id) {
  const Site* site = registry.find(id);
  return site ? site->label : std::string();
}

}  // namespace

std::optional<GraphFormat> graph_format_from_string(std::string_view s) {
  if (s == "gexf") return GraphFormat::kGexf;
  if (s == "graphml") return GraphFormat::kGraphml;
  return std::nullopt;
}

std::string to_gexf(const MutualGraph& graph, const SiteRegistry& registry) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<gexf xmlns=\"http://gexf.net/1.3\" version=\"1.3\">\n"
      "  <graph mode=\"static\" defaultedgetype=\"undirected\">\n"
      "    <attributes class=\"node\">\n"
      "      <attribute id=\"category\" title=\"category\" type=\"string\"/>\n"
      "    </attributes>\n"
      "    <nodes>\n";
  for (const std::string& id : graph.nodes) {
    const std::string escaped = xml_escape(id);
    out += "      <node id=\"" + escaped + "\" label=\"" + escaped + "\">\n";
    out += "        <attvalues><attvalue for=\"category\" value=\"" +
           xml_escape(label_of(registry, id)) + "\"/></attvalues>\n";
    out += "      </node>\n";
  }
  out += "    </nodes>\n    <edges>\n";
  std::size_t n = 0;
  for (const auto& [a, b] : graph.edges) {
    out += "      <edge id=\"" + std::to_string(n++) + "\" source=\"" +
           xml_escape(a) + "\" target=\"" + xml_escape(b) + "\"/>\n";
  }
  out += "    </edges>\n  </graph>\n</gexf>\n";
  return out;
}

std::string to_graphml(const MutualGraph& graph, const SiteRegistry& registry) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"category\" for=\"node\" attr.name=\"category\" "
      "attr.type=\"string\"/>\n"
      "  <graph id=\"mutual\" edgedefault=\"undirected\">\n";
  for (const std::string& id : graph.nodes) {
    out += "    <node id=\"" + xml_escape(id) +
           "\"><data key=\"category\">" + xml_escape(label_of(registry, id)) +
           "</data></node>\n";
  }
  for (const auto& [a, b] : graph.edges) {
    out += "    <edge source=\"" + xml_escape(a) + "\" target=\"" +
           xml_escape(b) + "\"/>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

void export_graph(const MutualGraph& graph, const SiteRegistry& registry,
                  const std::filesystem::path& path, GraphFormat format) {
  write_file(path, format == GraphFormat::kGexf ? to_gexf(graph, registry)
                                                : to_graphml(graph, registry));
}

}  // namespace nocomments
