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

#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <gtest/gtest.h>

#include "nocomments/outputs.h"
#include "support/test_support.h"

namespace nocomments {
namespace {

namespace pt = boost::property_tree;

struct Fixture {
  SiteRegistry registry;
  MutualGraph graph;
};

Fixture make_fixture() {
  Fixture f;
  f.registry.add({"a&b", "MI<RA>", {"a.org"}});
  f.registry.add({"c", "SIRE", {"c.org"}});
  f.registry.add({"d\"q", "SIRE", {"d.org"}});
  const std::vector<Edge> edges = {
      {"a&b", "c", LinkLocation::kMain, "p", "u"},
      {"c", "a&b", LinkLocation::kMain, "p", "u"}};
  f.graph = mutual_graph(edges, false, f.registry);
  return f;
}

pt::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree;
}

TEST(GraphExportTest, GexfReparses) {
  const Fixture f = make_fixture();
  const pt::ptree tree = parse_xml(to_gexf(f.graph, f.registry));
  std::map<std::string, std::string> categories;
  for (const auto& [tag, node] : tree.get_child("gexf.graph.nodes")) {
    if (tag != "node") continue;
    const std::string id = node.get<std::string>("<xmlattr>.id");
    EXPECT_EQ(node.get<std::string>("<xmlattr>.label"), id);
    categories[id] =
        node.get<std::string>("attvalues.attvalue.<xmlattr>.value");
  }
  EXPECT_EQ(categories, (std::map<std::string, std::string>{
                            {"a&b", "MI<RA>"}, {"c", "SIRE"}, {"d\"q", "SIRE"}}));
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [tag, e] : tree.get_child("gexf.graph.edges")) {
    if (tag != "edge") continue;
    edges.emplace(e.get<std::string>("<xmlattr>.source"),
                  e.get<std::string>("<xmlattr>.target"));
  }
  EXPECT_EQ(edges, f.graph.edges);
  EXPECT_EQ(tree.get<std::string>("gexf.graph.<xmlattr>.defaultedgetype"),
            "undirected");
}

TEST(GraphExportTest, GraphmlReparses) {
  const Fixture f = make_fixture();
  const pt::ptree tree = parse_xml(to_graphml(f.graph, f.registry));
  std::size_t nodes = 0;
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [tag, child] : tree.get_child("graphml.graph")) {
    if (tag == "node") {
      ++nodes;
      EXPECT_FALSE(child.get<std::string>("data").empty());
    } else if (tag == "edge") {
      edges.emplace(child.get<std::string>("<xmlattr>.source"),
                    child.get<std::string>("<xmlattr>.target"));
    }
  }
  EXPECT_EQ(nodes, 3u);
  EXPECT_EQ(edges, f.graph.edges);
}

TEST(GraphExportTest, FormatNamesAndFileOutput) {
  EXPECT_EQ(graph_format_from_string("gexf"), GraphFormat::kGexf);
  EXPECT_EQ(graph_format_from_string("graphml"), GraphFormat::kGraphml);
  EXPECT_FALSE(graph_format_from_string("dot").has_value());

  const Fixture f = make_fixture();
  testing::TempDir dir;
  export_graph(f.graph, f.registry, dir / "g/out.gexf", GraphFormat::kGexf);
  EXPECT_EQ(read_file(dir / "g/out.gexf"), to_gexf(f.graph, f.registry));
}

}  // namespace
}  // namespace nocomments
