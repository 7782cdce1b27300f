#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modgraph {

using VertexId = int;
using EdgeId = int;

/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Connected multigraph with genus-labelled vertices and oriented edges.
///
/// Vertex ids are dense (0..v-1) and edge ids are positions in `edges()`.
/// Loops and parallel edges are allowed. Construction validates endpoints
/// and connectivity, so every live instance is a connected graph.
class Multigraph {
 public:
  Multigraph(std::vector<int> vertex_genera, std::vector<Edge> edges);

  /// All-genus-0 convenience constructor.
  static Multigraph with_vertices(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(genera_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }
  const std::vector<int>& genera() const { return genera_; }
  int vertex_genus(VertexId v) const { return genera_.at(static_cast<std::size_t>(v)); }

  /// Valence of `v`; a loop counts twice.
  int valence(VertexId v) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<int> genera_;
  std::vector<Edge> edges_;
};

/// Signed fundamental cycles of a spanning tree.
struct CycleBasis {
  /// b x e matrix, entries in {-1, 0, +1}.
  std::vector<std::vector<int>> cycles;
  EdgeSet tree;
  /// Defining non-tree edge of each row.
  std::vector<EdgeId> chords;

  int rows() const { return static_cast<int>(cycles.size()); }
};

struct Contraction {
  Multigraph graph;
  /// old edge id -> new edge id, -1 for contracted edges.
  std::vector<EdgeId> edge_map;
};

Multigraph parse_graph(std::string_view input);

int betti(const Multigraph& g);
int genus(const Multigraph& g);
bool is_stable(const Multigraph& g);

/// Edges whose removal disconnects `g`.
EdgeSet bridges(const Multigraph& g);

/// Identifies the endpoints of every edge in `s` and removes those edges.
/// Throws GraphError if `s` contains a loop or an unknown id.
Contraction contract_edges(const Multigraph& g, const EdgeSet& s);

/// Drops the listed edges; the result must stay connected.
Contraction delete_edges(const Multigraph& g, const EdgeSet& s);

/// All spanning trees, each sorted, in lexicographic order.
std::vector<EdgeSet> spanning_trees(const Multigraph& g);

/// Fundamental cycles of the lexicographically first spanning tree.
CycleBasis fundamental_cycle_basis(const Multigraph& g);
/// Fundamental cycles of a caller-chosen spanning tree.
CycleBasis fundamental_cycle_basis(const Multigraph& g, const EdgeSet& tree);

/// Connected components of the spanning subgraph on `kept` edges.
int component_count(int vertex_count, std::span<const Edge> edges, std::span<const EdgeId> kept);

/// v x e signed incidence matrix: -1 at tail, +1 at head, 0 for loops.
std::vector<std::vector<int>> incidence_matrix(const Multigraph& g);

}  // namespace modgraph
