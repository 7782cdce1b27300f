#include "modgraph/convergence.hpp"
#include "modgraph/errors.hpp"

namespace modgraph {

Multigraph make_ngon(int n) {
  if (n < 2) throw GraphError("n-gon needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph::with_vertices(n, std::move(edges));
}

Multigraph make_doubled_2ngon(int n) {
  if (n < 1) throw GraphError("doubled 2n-gon needs n >= 1");
  const int sides = 2 * n;
  std::vector<Edge> edges;
  for (int i = 0; i < sides; ++i) {
    const Edge side{i, (i + 1) % sides};
    edges.push_back(side);
    if (i % 2 == 0) edges.push_back(side);
  }
  return Multigraph::with_vertices(sides, std::move(edges));
}

}  // namespace modgraph
