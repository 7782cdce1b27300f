#pragma once

#include <string>

#include "json.hpp"
#include "modgraph/graph.hpp"

namespace modgraph {

/// {"vertices": [{"id", "genus"}...], "edges": [[tail, head], ...]}
nlohmann::ordered_json graph_to_json(const Multigraph& g);

/// Reads a graph file; ParseError messages are prefixed with the path.
Multigraph read_graph_file(const std::string& path);

}  // namespace modgraph
