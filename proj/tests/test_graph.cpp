#include <algorithm>
#include <random>

#include "doctest.h"
#include "modgraph/errors.hpp"
#include "modgraph/graph.hpp"
#include "modgraph/graph_io.hpp"
#include "modgraph/selftest.hpp"
#include "oracles.hpp"

using namespace modgraph;

namespace {

Multigraph triangle() { return parse_graph("0 1\n1 2\n2 0"); }
Multigraph theta() { return Multigraph::with_vertices(2, {{0, 1}, {0, 1}, {0, 1}}); }
Multigraph loop() { return Multigraph::with_vertices(1, {{0, 0}}); }

}  // namespace

TEST_CASE("edge-list and JSON parsing") {
  const Multigraph p3 = triangle();
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 3);
  CHECK(p3.edge(2) == Edge{2, 0});

  const Multigraph l = parse_graph(R"({"edges": [[0, 0]]})");
  CHECK(l.vertex_count() == 1);
  CHECK(betti(l) == 1);

  const Multigraph labelled = parse_graph(R"({"vertices": [{"id": 0, "genus": 2}, {"id": 1}], "edges": [[0, 1]]})");
  CHECK(labelled.genera() == std::vector<int>{2, 0});

  CHECK(parse_graph("# comment\n\n5 9  # trailing\n").vertex_count() == 2);
}

TEST_CASE("parse errors carry a line number") {
  CHECK_THROWS_AS(parse_graph("0 1\n2 3"), ParseError);
  try {
    parse_graph("0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_graph("{\n\"edges\": [[0, 1],\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_graph(R"({"vertices": [{"id": 0}], "edges": [[0, 1]]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices": [{"id": 0, "genus": -1}], "edges": []})"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("JSON round trip") {
  const Multigraph g({0, 3, 1}, {{0, 1}, {1, 2}, {2, 2}, {2, 0}});
  CHECK(parse_graph(graph_to_json(g).dump()) == g);
}

TEST_CASE("betti and genus") {
  CHECK(betti(triangle()) == 1);
  CHECK(betti(theta()) == 2);
  CHECK(betti(loop()) == 1);
  CHECK(genus(Multigraph({2, 0, 0}, {{0, 1}, {1, 2}, {2, 0}})) == 3);
  CHECK(genus(Multigraph::with_vertices(1, {})) == 0);
}

TEST_CASE("bridges") {
  CHECK(bridges(triangle()).empty());
  CHECK(bridges(Multigraph::with_vertices(3, {{0, 1}, {1, 2}})) == EdgeSet{0, 1});
  const Multigraph joined =
      Multigraph::with_vertices(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(bridges(joined) == EdgeSet{3});
  CHECK(bridges(Multigraph::with_vertices(2, {{0, 0}, {0, 1}, {1, 1}})) == EdgeSet{1});
}

TEST_CASE("stability") {
  CHECK(is_stable(Multigraph::with_vertices(2, {{0, 0}, {0, 1}, {1, 1}})));
  CHECK_FALSE(is_stable(triangle()));
  CHECK_FALSE(is_stable(Multigraph({1}, {})));
  CHECK(is_stable(Multigraph({2}, {})));
}

TEST_CASE("contraction") {
  const Contraction c = contract_edges(triangle(), {0});
  CHECK(c.graph.vertex_count() == 2);
  CHECK(c.graph.edge_count() == 2);
  CHECK(betti(c.graph) == 1);
  CHECK(c.edge_map == std::vector<EdgeId>{-1, 0, 1});

  const Multigraph square = Multigraph::with_vertices(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}});
  const Contraction d = contract_edges(square, {2, 5});
  CHECK(d.graph.vertex_count() == 2);
  CHECK(d.graph.edge_count() == 4);
  CHECK(betti(d.graph) == 3);

  const Contraction id = contract_edges(square, {});
  CHECK(id.graph == square);

  CHECK_THROWS_AS(contract_edges(loop(), {0}), GraphError);

  // A cycle inside S is absorbed into the vertex genus.
  const Contraction whole = contract_edges(triangle(), {0, 1, 2});
  CHECK(whole.graph.vertex_count() == 1);
  CHECK(betti(whole.graph) == 0);
  CHECK(genus(whole.graph) == 1);
}

TEST_CASE("spanning trees") {
  CHECK(spanning_trees(triangle()) == std::vector<EdgeSet>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(spanning_trees(theta()) == std::vector<EdgeSet>{{0}, {1}, {2}});
  CHECK(spanning_trees(loop()) == std::vector<EdgeSet>{{}});
}

TEST_CASE("fundamental cycle basis") {
  const CycleBasis t = fundamental_cycle_basis(theta());
  CHECK(t.tree == EdgeSet{0});
  CHECK(t.cycles == std::vector<std::vector<int>>{{-1, 1, 0}, {-1, 0, 1}});
  CHECK(fundamental_cycle_basis(loop()).cycles == std::vector<std::vector<int>>{{1}});
  const CycleBasis p = fundamental_cycle_basis(triangle());
  REQUIRE(p.rows() == 1);
  CHECK(p.cycles[0] == std::vector<int>{1, 1, 1});
}

TEST_CASE("structural invariants on small and random multigraphs") {
  std::vector<Multigraph> graphs = small_multigraphs(4);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) graphs.push_back(random_multigraph(rng, 9, false));
  for (const Multigraph& g : graphs) {
    const auto trees = spanning_trees(g);
    CHECK(trees.size() == oracle::matrix_tree_count(g).get_ui());
    CHECK(std::is_sorted(trees.begin(), trees.end()));

    const CycleBasis basis = fundamental_cycle_basis(g);
    CHECK(basis.rows() == betti(g));
    const auto incidence = incidence_matrix(g);
    for (int r = 0; r < basis.rows(); ++r) {
      CHECK(basis.cycles[r][basis.chords[r]] == 1);
      for (const auto& row : incidence) {
        long dot = 0;
        for (int e = 0; e < g.edge_count(); ++e) dot += row[e] * basis.cycles[r][e];
        CHECK(dot == 0);
      }
    }

    EdgeSet in_every_tree;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (std::all_of(trees.begin(), trees.end(), [&](const EdgeSet& t) { return std::binary_search(t.begin(), t.end(), e); }))
        in_every_tree.push_back(e);
    CHECK(bridges(g) == in_every_tree);
    CHECK(std::vector<int>(bridges(g)) == oracle::bridges(g));

    const Contraction core = contract_edges(g, bridges(g));
    CHECK(bridges(core.graph).empty());
    CHECK(betti(core.graph) == betti(g));
  }
}
