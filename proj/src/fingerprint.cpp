#include "fingerprint.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <utility>

#include "splitmix.hpp"
#include "union_find.hpp"

namespace modgraph::detail {

namespace {

mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::uint64_t mix(std::uint64_t h, std::uint64_t x) { return splitmix64(h ^ splitmix64(x)); }

std::uint64_t refinement_hash(const Multigraph& g) {
  const int v = g.vertex_count();
  std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(v));
  std::vector<std::uint64_t> colour(static_cast<std::size_t>(v));
  std::vector<int> loops(static_cast<std::size_t>(v), 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      ++loops[e.tail];
    } else {
      adjacent[e.tail].push_back(e.head);
      adjacent[e.head].push_back(e.tail);
    }
  }
  for (int x = 0; x < v; ++x)
    colour[x] = mix(mix(static_cast<std::uint64_t>(g.vertex_genus(x)), loops[x]), adjacent[x].size());
  for (int round = 0; round < v; ++round) {
    std::vector<std::uint64_t> next(colour.size());
    for (int x = 0; x < v; ++x) {
      std::vector<std::uint64_t> seen;
      for (int y : adjacent[x]) seen.push_back(colour[y]);
      std::sort(seen.begin(), seen.end());
      std::uint64_t h = colour[x];
      for (std::uint64_t c : seen) h = mix(h, c);
      next[x] = h;
    }
    colour = std::move(next);
  }
  std::sort(colour.begin(), colour.end());
  std::uint64_t h = 0;
  for (std::uint64_t c : colour) h = mix(h, c);
  return h;
}

}  // namespace

mpz_class tree_count(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count <= 1) return 1;
  const std::size_t n = static_cast<std::size_t>(vertex_count - 1);
  std::vector<std::vector<mpz_class>> lap(n, std::vector<mpz_class>(n, 0));
  for (const Edge& e : edges) {
    if (e.is_loop()) continue;
    const auto t = static_cast<std::size_t>(e.tail), h = static_cast<std::size_t>(e.head);
    if (t < n) lap[t][t] += 1;
    if (h < n) lap[h][h] += 1;
    if (t < n && h < n) {
      lap[t][h] -= 1;
      lap[h][t] -= 1;
    }
  }
  return bareiss_det(std::move(lap));
}

std::string fingerprint(const Multigraph& g) {
  const int v = g.vertex_count();
  const auto& edges = g.edges();

  std::vector<int> degrees;
  for (int x = 0; x < v; ++x) degrees.push_back(g.valence(x));
  std::sort(degrees.begin(), degrees.end());
  const auto loop_count = std::count_if(edges.begin(), edges.end(), [](const Edge& e) { return e.is_loop(); });

  std::vector<std::pair<mpz_class, mpz_class>> minors;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<Edge> rest = edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    const mpz_class deleted = tree_count(v, rest);
    if (edges[i].is_loop()) {
      minors.emplace_back(deleted, deleted);
      continue;
    }
    // Contract: merge the two endpoints, renumbering densely.
    UnionFind uf(v);
    uf.unite(edges[i].tail, edges[i].head);
    std::vector<int> label(static_cast<std::size_t>(v), -1);
    int next = 0;
    for (int x = 0; x < v; ++x)
      if (label[uf.find(x)] < 0) label[uf.find(x)] = next++;
    std::vector<Edge> merged;
    for (const Edge& e : rest) merged.push_back({label[uf.find(e.tail)], label[uf.find(e.head)]});
    minors.emplace_back(deleted, tree_count(next, merged));
  }
  std::sort(minors.begin(), minors.end());

  std::ostringstream key;
  key << v << ':' << edges.size() << ':' << loop_count << ':';
  for (int d : degrees) key << d << ',';
  key << ':';
  for (int x = 0; x < v; ++x) key << g.vertex_genus(x) << ',';
  key << ':' << tree_count(v, edges) << ':';
  for (const auto& [d, c] : minors) key << d << '/' << c << ',';
  key << ':' << std::hex << refinement_hash(g);
  return key.str();
}

}  // namespace modgraph::detail
