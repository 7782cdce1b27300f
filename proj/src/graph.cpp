#include "modgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "modgraph/errors.hpp"
#include "union_find.hpp"

namespace modgraph {

Multigraph::Multigraph(std::vector<int> vertex_genera, std::vector<Edge> edges)
    : genera_(std::move(vertex_genera)), edges_(std::move(edges)) {
  if (genera_.empty()) throw GraphError("graph has no vertices");
  for (int g : genera_)
    if (g < 0) throw GraphError("negative vertex genus");
  const int v = vertex_count();
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= v || e.head < 0 || e.head >= v)
      throw GraphError("edge endpoint references a missing vertex");
  }
  std::vector<EdgeId> all(edges_.size());
  std::iota(all.begin(), all.end(), 0);
  if (component_count(v, edges_, all) != 1) throw GraphError("graph is disconnected");
}

Multigraph Multigraph::with_vertices(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  return Multigraph(std::vector<int>(static_cast<std::size_t>(vertex_count), 0), std::move(edges));
}

int Multigraph::valence(VertexId v) const {
  int val = 0;
  for (const Edge& e : edges_) val += (e.tail == v) + (e.head == v);
  return val;
}

int component_count(int vertex_count, std::span<const Edge> edges, std::span<const EdgeId> kept) {
  detail::UnionFind uf(vertex_count);
  int comps = vertex_count;
  for (EdgeId id : kept) {
    const Edge& e = edges[static_cast<std::size_t>(id)];
    if (uf.unite(e.tail, e.head)) --comps;
  }
  return comps;
}

int betti(const Multigraph& g) { return g.edge_count() - g.vertex_count() + 1; }

int genus(const Multigraph& g) {
  return betti(g) + std::accumulate(g.genera().begin(), g.genera().end(), 0);
}

bool is_stable(const Multigraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (2 * g.vertex_genus(v) - 2 + g.valence(v) <= 0) return false;
  }
  return true;
}

EdgeSet bridges(const Multigraph& g) {
  const int v = g.vertex_count();
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(static_cast<std::size_t>(v));
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) continue;
    adj[e.tail].emplace_back(e.head, id);
    adj[e.head].emplace_back(e.tail, id);
  }

  // Iterative lowlink DFS; the parent edge is skipped by id so parallel
  // edges are handled correctly.
  std::vector<int> order(v, -1), low(v, 0);
  EdgeSet out;
  int clock = 0;
  struct Frame {
    VertexId vertex;
    EdgeId via;
    std::size_t next;
  };
  std::vector<Frame> stack;
  stack.push_back({0, -1, 0});
  order[0] = low[0] = clock++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < adj[f.vertex].size()) {
      auto [to, id] = adj[f.vertex][f.next++];
      if (id == f.via) continue;
      if (order[to] < 0) {
        order[to] = low[to] = clock++;
        stack.push_back({to, id, 0});
      } else {
        low[f.vertex] = std::min(low[f.vertex], order[to]);
      }
    } else {
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        VertexId parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        if (low[done.vertex] > order[parent]) out.push_back(done.via);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_edge_set(const Multigraph& g, const EdgeSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.edge_count()) throw GraphError("edge id out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw GraphError("edge set must be sorted and duplicate-free");
  }
}

}  // namespace

Contraction contract_edges(const Multigraph& g, const EdgeSet& s) {
  check_edge_set(g, s);
  std::vector<char> in_s(static_cast<std::size_t>(g.edge_count()), 0);
  detail::UnionFind uf(g.vertex_count());
  for (EdgeId id : s) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) throw GraphError("cannot contract a loop (edge " + std::to_string(id) + ")");
    in_s[id] = 1;
  }
  std::vector<EdgeId> extra;
  for (EdgeId id : s) {
    const Edge& e = g.edge(id);
    if (!uf.unite(e.tail, e.head)) extra.push_back(id);
  }

  std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> genera;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int root = uf.find(v);
    if (new_id[root] < 0) {
      new_id[root] = static_cast<int>(genera.size());
      genera.push_back(0);
    }
    genera[new_id[root]] += g.vertex_genus(v);
  }
  // Cycles inside the contracted set become vertex genus, so that
  // genus(result) == genus(g).
  for (EdgeId id : extra) genera[new_id[uf.find(g.edge(id).tail)]] += 1;

  std::vector<Edge> edges;
  std::vector<EdgeId> map(static_cast<std::size_t>(g.edge_count()), -1);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (in_s[id]) continue;
    const Edge& e = g.edge(id);
    map[id] = static_cast<EdgeId>(edges.size());
    edges.push_back({new_id[uf.find(e.tail)], new_id[uf.find(e.head)]});
  }
  return {Multigraph(std::move(genera), std::move(edges)), std::move(map)};
}

Contraction delete_edges(const Multigraph& g, const EdgeSet& s) {
  check_edge_set(g, s);
  std::vector<Edge> edges;
  std::vector<EdgeId> map(static_cast<std::size_t>(g.edge_count()), -1);
  std::size_t k = 0;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (k < s.size() && s[k] == id) {
      ++k;
      continue;
    }
    map[id] = static_cast<EdgeId>(edges.size());
    edges.push_back(g.edge(id));
  }
  return {Multigraph(g.genera(), std::move(edges)), std::move(map)};
}

std::vector<EdgeSet> spanning_trees(const Multigraph& g) {
  const int v = g.vertex_count();
  const int e = g.edge_count();
  std::vector<EdgeSet> out;
  EdgeSet current;

  // Include-before-exclude recursion yields lexicographic order. An edge
  // may be excluded only if the forest plus the remaining edges can still
  // span the graph.
  std::function<void(int, const detail::UnionFind&, int)> recurse =
      [&](int next, const detail::UnionFind& forest, int comps) {
        if (comps == 1) {
          out.push_back(current);
          return;
        }
        if (next == e) return;
        const Edge& edge = g.edge(next);
        if (!edge.is_loop() && !forest.connected(edge.tail, edge.head)) {
          detail::UnionFind with = forest;
          with.unite(edge.tail, edge.head);
          current.push_back(next);
          recurse(next + 1, with, comps - 1);
          current.pop_back();
        }
        detail::UnionFind reach = forest;
        int reach_comps = comps;
        for (int k = next + 1; k < e && reach_comps > 1; ++k) {
          if (reach.unite(g.edge(k).tail, g.edge(k).head)) --reach_comps;
        }
        if (reach_comps == 1) recurse(next + 1, forest, comps);
      };
  recurse(0, detail::UnionFind(v), v);
  return out;
}

CycleBasis fundamental_cycle_basis(const Multigraph& g) {
  const int v = g.vertex_count();
  detail::UnionFind uf(v);
  EdgeSet tree;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (uf.unite(e.tail, e.head)) tree.push_back(id);
  }
  return fundamental_cycle_basis(g, tree);
}

CycleBasis fundamental_cycle_basis(const Multigraph& g, const EdgeSet& tree) {
  check_edge_set(g, tree);
  const int v = g.vertex_count();
  const int e = g.edge_count();
  if (static_cast<int>(tree.size()) != v - 1 || component_count(v, g.edges(), tree) != 1)
    throw GraphError("edge set is not a spanning tree");

  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(static_cast<std::size_t>(v));
  std::vector<char> in_tree(static_cast<std::size_t>(e), 0);
  for (EdgeId id : tree) {
    in_tree[id] = 1;
    adj[g.edge(id).tail].emplace_back(g.edge(id).head, id);
    adj[g.edge(id).head].emplace_back(g.edge(id).tail, id);
  }

  CycleBasis basis;
  basis.tree = tree;
  for (EdgeId chord = 0; chord < e; ++chord) {
    if (in_tree[chord]) continue;
    std::vector<int> row(static_cast<std::size_t>(e), 0);
    row[chord] = 1;
    const Edge& c = g.edge(chord);
    // Close the cycle by walking the tree from head back to tail.
    std::vector<std::pair<VertexId, EdgeId>> parent(static_cast<std::size_t>(v), {-1, -1});
    std::vector<char> seen(static_cast<std::size_t>(v), 0);
    std::queue<VertexId> q;
    q.push(c.head);
    seen[c.head] = 1;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (auto [y, id] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        parent[y] = {x, id};
        q.push(y);
      }
    }
    // parent pointers lead from tail back to head; the walk runs head -> tail.
    for (VertexId y = c.tail; y != c.head;) {
      auto [x, id] = parent[y];
      const Edge& f = g.edge(id);
      row[id] = (f.tail == x && f.head == y) ? 1 : -1;
      y = x;
    }
    basis.cycles.push_back(std::move(row));
    basis.chords.push_back(chord);
  }
  return basis;
}

std::vector<std::vector<int>> incidence_matrix(const Multigraph& g) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(g.vertex_count()),
                                  std::vector<int>(static_cast<std::size_t>(g.edge_count()), 0));
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) continue;
    m[e.tail][id] -= 1;
    m[e.head][id] += 1;
  }
  return m;
}

}  // namespace modgraph
