#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library beyond reading a graph's vertices and edges.

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "modgraph/graph.hpp"

namespace oracle {

using modgraph::Edge;
using modgraph::Multigraph;

/// Components of (V, kept edges) by depth-first search.
inline int components(int v, const std::vector<Edge>& edges, std::uint32_t kept) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(v));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(kept >> i & 1)) continue;
    adj[edges[i].tail].push_back(edges[i].head);
    adj[edges[i].head].push_back(edges[i].tail);
  }
  std::vector<bool> seen(static_cast<std::size_t>(v), false);
  int count = 0;
  for (int s = 0; s < v; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
  }
  return count;
}

inline std::uint32_t full_mask(const Multigraph& g) { return (std::uint32_t{1} << g.edge_count()) - 1; }

/// |S| - (components(G - S) - 1).
inline int corank(const Multigraph& g, std::uint32_t s) {
  return std::popcount(s) - (components(g.vertex_count(), g.edges(), full_mask(g) & ~s) - 1);
}

/// Spanning trees as edge masks: v - 1 edges, no loop, connected.
inline std::vector<std::uint32_t> tree_masks(const Multigraph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m <= full_mask(g); ++m) {
    if (std::popcount(m) != g.vertex_count() - 1) continue;
    if (components(g.vertex_count(), g.edges(), m) == 1) out.push_back(m);
  }
  return out;
}

/// Kirchhoff polynomial as a map from complement masks to coefficients.
inline std::map<std::uint32_t, int> psi_terms(const Multigraph& g) {
  std::map<std::uint32_t, int> out;
  for (std::uint32_t t : tree_masks(g)) ++out[full_mask(g) & ~t];
  return out;
}

/// Spanning-tree count by the matrix-tree theorem, Gaussian elimination over Q.
inline mpz_class matrix_tree_count(const Multigraph& g) {
  const int n = g.vertex_count() - 1;
  if (n <= 0) return 1;
  std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(n), std::vector<mpq_class>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    const int t = e.tail - 1, h = e.head - 1;
    if (t >= 0) a[t][t] += 1;
    if (h >= 0) a[h][h] += 1;
    if (t >= 0 && h >= 0) {
      a[t][h] -= 1;
      a[h][t] -= 1;
    }
  }
  mpq_class det = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (int i = k + 1; i < n; ++i) {
      const mpq_class f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det.get_num();
}

/// max |S| / corank(S) over nonempty S and the union of maximizers.
struct Density {
  mpq_class m;
  std::uint32_t t0 = 0;
};

inline Density density(const Multigraph& g) {
  Density d;
  d.m = 0;
  for (std::uint32_t s = 1; s <= full_mask(g); ++s) {
    mpq_class r(std::popcount(s), corank(g, s));
    r.canonicalize();
    if (r > d.m) {
      d.m = r;
      d.t0 = s;
    } else if (r == d.m) {
      d.t0 |= s;
    }
  }
  return d;
}

/// Bridges by deletion.
inline std::vector<int> bridges(const Multigraph& g) {
  std::vector<int> out;
  for (int i = 0; i < g.edge_count(); ++i)
    if (components(g.vertex_count(), g.edges(), full_mask(g) & ~(std::uint32_t{1} << i)) > 1) out.push_back(i);
  return out;
}

}  // namespace oracle
