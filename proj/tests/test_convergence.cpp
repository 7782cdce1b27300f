#include "doctest.h"
#include "modgraph/convergence.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/selftest.hpp"
#include "oracles.hpp"

using namespace modgraph;

namespace {

Multigraph theta() { return Multigraph::with_vertices(2, {{0, 1}, {0, 1}, {0, 1}}); }
Multigraph bridged() {
  return Multigraph::with_vertices(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
}

mpq_class ratio(int a, int b) {
  mpq_class r(a, b);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("family constructors") {
  for (int n = 2; n <= 7; ++n) {
    const Multigraph g = make_ngon(n);
    CHECK(g.vertex_count() == n);
    CHECK(betti(g) == 1);
  }
  CHECK(make_ngon(2).edges() == std::vector<Edge>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(make_ngon(1), GraphError);
  for (int n = 1; n <= 6; ++n) {
    const Multigraph g = make_doubled_2ngon(n);
    CHECK(g.edge_count() == 3 * n);
    CHECK(betti(g) == n + 1);
    CHECK(genus(g) == n + 1);
    CHECK(is_stable(g));
  }
  CHECK_THROWS_AS(make_doubled_2ngon(0), GraphError);
}

TEST_CASE("thresholds") {
  for (int n = 2; n <= 6; ++n) CHECK(threshold(make_ngon(n)).c == n);
  for (int n = 2; n <= 5; ++n) CHECK(threshold(make_doubled_2ngon(n)).c == n);
  CHECK(threshold(theta()).c == ratio(3, 2));
  const Threshold b = threshold(bridged());
  CHECK(b.c == 3);
  CHECK(b.reduction.bridges == EdgeSet{3});
  CHECK(b.reduction.edge_map[3] == -1);
  CHECK(b.reduction.core.edge_count() == 6);
  CHECK_THROWS_AS(threshold(Multigraph::with_vertices(3, {{0, 1}, {1, 2}})), TreeInputError);
}

TEST_CASE("optimal contraction") {
  // The doubled square ties with its single sides, so it is already optimal.
  CHECK(optimal_contraction(make_doubled_2ngon(2)).contracted.empty());
  for (int n = 3; n <= 5; ++n) {
    const OptimalContraction oc = optimal_contraction(make_doubled_2ngon(n));
    CHECK(oc.graph.vertex_count() == n);
    CHECK(oc.graph.edge_count() == n);
    CHECK(betti(oc.graph) == 1);
    CHECK(oc.contracted.size() == static_cast<std::size_t>(2 * n));
    CHECK(oc.c == n);
  }
  CHECK(optimal_contraction(make_ngon(4)).contracted.empty());
  CHECK(optimal_contraction(theta()).contracted.empty());

  // A loop outside the densest set is deleted, not contracted.
  const Multigraph tadpole = Multigraph::with_vertices(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}});
  const OptimalContraction oc = optimal_contraction(tadpole);
  CHECK(oc.c == 3);
  CHECK(oc.contracted == EdgeSet{3});
  CHECK(oc.edge_map[3] == -1);
  CHECK(oc.graph.edge_count() == 3);

  for (const CorpusEntry& entry : acceptance_corpus()) {
    const Multigraph core = contract_bridges(entry.graph).core;
    const OptimalContraction c = optimal_contraction(core);
    CHECK(oracle::density(c.graph).m == oracle::density(core).m);
    CHECK(c.c == ratio(c.graph.edge_count(), betti(c.graph)));
  }
}

TEST_CASE("analyze") {
  const ConvergenceReport p3 = analyze(make_ngon(3));
  CHECK(p3.c == 3);
  CHECK(p3.psi_from_trees.to_string() == "x0 + x1 + x2");
  CHECK(p3.psi_routes_agree);
  CHECK(p3.contraction_verified);
  CHECK(p3.contraction.graph == make_ngon(3));

  const ConvergenceReport d5 = analyze(make_doubled_2ngon(5));
  CHECK(d5.c == 5);
  CHECK(d5.genus == 6);
  CHECK(d5.stable);
  CHECK_FALSE(d5.core_optimal);
  CHECK(d5.core_ratio == ratio(5, 2));

  const ConvergenceReport loop = analyze(Multigraph::with_vertices(1, {{0, 0}}));
  CHECK(loop.c == 1);

  const ConvergenceReport tree = analyze(Multigraph::with_vertices(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(tree.has_cycles);
  CHECK(tree.psi_routes_agree);
  CHECK_FALSE(tree.core.has_value());

  AnalyzeOptions small;
  small.max_edges = 5;
  CHECK_THROWS_AS(analyze(make_doubled_2ngon(2), small), GuardError);

  AnalyzeOptions probe;
  probe.with_probe = true;
  CHECK(analyze(make_doubled_2ngon(3), probe).probe_note.find("skipped") != std::string::npos);
}

TEST_CASE("lower bound c >= e/b on the bridgeless core") {
  for (const CorpusEntry& entry : acceptance_corpus()) {
    const Threshold t = threshold(entry.graph);
    CHECK(t.c >= ratio(t.reduction.core.edge_count(), betti(t.reduction.core)));
  }
}
