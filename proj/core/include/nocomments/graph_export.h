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

#ifndef NOCOMMENTS_GRAPH_EXPORT_H_
#define NOCOMMENTS_GRAPH_EXPORT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "nocomments/corpus.h"
#include "nocomments/linkgraph.h"

namespace nocomments {

enum class GraphFormat { kGexf, kGraphml };

std::optional<GraphFormat> graph_format_from_string(std::string_view s);

// GEXF 1.3, Gephi's native format. Node labels are site ids; the site's
// category label is the "category" node attribute.
std::string to_gexf(const MutualGraph& graph, const SiteRegistry& registry);

// GraphML with a "category" node key.
std::string to_graphml(const MutualGraph& graph, const SiteRegistry& registry);

// Throws Error if the file cannot be written.
void export_graph(const MutualGraph& graph, const SiteRegistry& registry,
                  const std::filesystem::path& path, GraphFormat format);

}  // namespace nocomments

#endif  // NOCOMMENTS_GRAPH_EXPORT_H_
