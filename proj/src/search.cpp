#include <omp.h>

#include <algorithm>
#include <map>
#include <string>

#include "fingerprint.hpp"
#include "modgraph/convergence.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/subset_kernels.hpp"

namespace modgraph {

namespace {

struct Candidate {
  Multigraph graph;
  std::string key;
  mpq_class c;
  bool bridgeless = false;
};

/// Cubic graphs of genus g + 1 from one of genus g: join two new vertices
/// placed on edges (possibly the same edge twice), or hang a vertex with a
/// loop off a new vertex on an edge.
std::vector<Multigraph> cubic_children(const Multigraph& g) {
  const int v = g.vertex_count();
  const int e = g.edge_count();
  std::vector<Multigraph> out;
  for (int a = 0; a < e; ++a) {
    for (int b = a; b < e; ++b) {
      std::vector<Edge> edges;
      const int p = v, q = v + 1;
      for (int id = 0; id < e; ++id) {
        const Edge& old = g.edge(id);
        if (id == a && id == b) {
          edges.push_back({old.tail, p});
          edges.push_back({p, q});
          edges.push_back({q, old.head});
        } else if (id == a) {
          edges.push_back({old.tail, p});
          edges.push_back({p, old.head});
        } else if (id == b) {
          edges.push_back({old.tail, q});
          edges.push_back({q, old.head});
        } else {
          edges.push_back(old);
        }
      }
      edges.push_back({p, q});
      out.push_back(Multigraph::with_vertices(v + 2, std::move(edges)));
    }
  }
  for (int a = 0; a < e; ++a) {
    std::vector<Edge> edges;
    const int p = v, q = v + 1;
    for (int id = 0; id < e; ++id) {
      const Edge& old = g.edge(id);
      if (id == a) {
        edges.push_back({old.tail, p});
        edges.push_back({p, old.head});
      } else {
        edges.push_back(old);
      }
    }
    edges.push_back({p, q});
    edges.push_back({q, q});
    out.push_back(Multigraph::with_vertices(v + 2, std::move(edges)));
  }
  return out;
}

/// Fingerprints (and, when `with_threshold`, thresholds) in parallel, then
/// keeps the first graph of every fingerprint in input order.
std::vector<Candidate> evaluate_unique(std::vector<Multigraph> graphs, bool with_threshold) {
  std::vector<Candidate> slots;
  slots.reserve(graphs.size());
  for (Multigraph& g : graphs) slots.push_back({std::move(g), {}, 0, false});
  const auto n = static_cast<std::int64_t>(slots.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) slots[i].key = detail::fingerprint(slots[i].graph);

  std::map<std::string, bool> seen;
  std::vector<Candidate> unique;
  for (Candidate& c : slots)
    if (seen.emplace(c.key, true).second) unique.push_back(std::move(c));

  if (with_threshold) {
    const auto m = static_cast<std::int64_t>(unique.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < m; ++i) {
      Candidate& c = unique[i];
      c.bridgeless = bridges(c.graph).empty();
      if (!c.bridgeless) continue;
      const auto corank = kernels::corank_table(c.graph.vertex_count(), c.graph.edges());
      const auto scan = kernels::density_scan(corank, c.graph.edge_count());
      c.c = mpq_class(scan.numerator, scan.denominator);
    }
  }
  return unique;
}

}  // namespace

std::vector<SearchHit> search_divergent(int genus, int max_edges, const mpq_class& target) {
  if (genus < SearchLimits::kMinGenus || genus > SearchLimits::kMaxGenus)
    throw GuardError("search genus must lie in [2, 7]");
  if (max_edges < 1 || max_edges > SearchLimits::kMaxEdges) throw GuardError("search max_edges must lie in [1, 15]");
  if (target <= 0) throw GuardError("search target must be positive");

  // Every stable genus-0 graph of Betti number g contracts from a cubic one,
  // and c never increases under contraction, so the cubic level seeds a
  // pruned walk down through single-edge contractions.
  std::vector<Candidate> level = evaluate_unique(
      {Multigraph::with_vertices(2, {{0, 1}, {0, 1}, {0, 1}}), Multigraph::with_vertices(2, {{0, 0}, {0, 1}, {1, 1}})},
      genus == 2);
  for (int g = 3; g <= genus; ++g) {
    std::vector<Multigraph> children;
    for (const Candidate& parent : level)
      for (Multigraph& child : cubic_children(parent.graph)) children.push_back(std::move(child));
    level = evaluate_unique(std::move(children), g == genus);
  }

  std::vector<Candidate> frontier;
  for (Candidate& c : level)
    if (c.bridgeless && c.c >= target) frontier.push_back(std::move(c));

  std::vector<Candidate> found;
  while (!frontier.empty()) {
    std::vector<Multigraph> contracted;
    for (Candidate& c : frontier) {
      for (EdgeId id = 0; id < c.graph.edge_count(); ++id)
        if (!c.graph.edge(id).is_loop()) contracted.push_back(contract_edges(c.graph, {id}).graph);
      if (c.graph.edge_count() <= max_edges) found.push_back(std::move(c));
    }
    std::vector<Candidate> next;
    for (Candidate& c : evaluate_unique(std::move(contracted), true))
      if (c.bridgeless && c.c >= target) next.push_back(std::move(c));
    frontier = std::move(next);
  }

  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.c != b.c) return a.c > b.c;
    if (a.graph.edge_count() != b.graph.edge_count()) return a.graph.edge_count() < b.graph.edge_count();
    return a.key < b.key;
  });
  std::vector<SearchHit> hits;
  for (Candidate& c : found) hits.push_back({std::move(c.graph), c.c});
  return hits;
}

}  // namespace modgraph
