#include "modgraph/convergence.hpp"

#include <algorithm>
#include <iterator>

#include "modgraph/errors.hpp"
#include "modgraph/kirchhoff.hpp"

namespace modgraph {

namespace {

mpq_class ratio(int num, int den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

BridgeReduction contract_bridges(const Multigraph& g) {
  EdgeSet br = bridges(g);
  Contraction quotient = contract_edges(g, br);
  return {std::move(br), std::move(quotient.graph), std::move(quotient.edge_map)};
}

Threshold threshold(const Multigraph& g) {
  BridgeReduction reduction = contract_bridges(g);
  if (reduction.core.edge_count() == 0) throw TreeInputError("graph has no cycles; the threshold is undefined");
  DensityCertificate cert = build_witness(CographicMatroid(reduction.core));
  mpq_class c = cert.m;
  return {std::move(c), std::move(cert), std::move(reduction)};
}

mpq_class density_threshold(const Multigraph& bridgeless) { return density(CographicMatroid(bridgeless)).m; }

OptimalContraction optimal_contraction(const Multigraph& g) {
  const CographicMatroid matroid(g);
  const DensityCertificate cert = density(matroid);

  EdgeSet removed, loops;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (std::binary_search(cert.t0.begin(), cert.t0.end(), id)) continue;
    removed.push_back(id);
    if (g.edge(id).is_loop()) loops.push_back(id);
  }

  const Contraction pruned = delete_edges(g, loops);
  EdgeSet to_contract;
  for (EdgeId id : removed)
    if (!g.edge(id).is_loop()) to_contract.push_back(pruned.edge_map[id]);
  Contraction quotient = contract_edges(pruned.graph, to_contract);

  std::vector<EdgeId> edge_map(static_cast<std::size_t>(g.edge_count()), -1);
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    if (pruned.edge_map[id] >= 0) edge_map[id] = quotient.edge_map[pruned.edge_map[id]];

  const Multigraph& bar = quotient.graph;
  const int t0_size = static_cast<int>(cert.t0.size());
  const int t0_rank = corank(matroid, cert.t0);
  if (bar.edge_count() != t0_size || betti(bar) != t0_rank)
    throw InternalError("contracted graph does not match the densest set");
  const mpq_class c_bar = density_threshold(bar);
  if (c_bar != cert.m) throw InternalError("contraction changed the threshold");
  if (c_bar != ratio(bar.edge_count(), betti(bar))) throw InternalError("contracted graph is not optimal");

  return {std::move(removed), bar, std::move(edge_map), c_bar};
}

ConvergenceReport analyze(const Multigraph& g, const AnalyzeOptions& options) {
  if (g.edge_count() > options.max_edges)
    throw GuardError("graph has " + std::to_string(g.edge_count()) + " edges; limit is " +
                     std::to_string(options.max_edges));
  ConvergenceReport r(g);
  r.v = g.vertex_count();
  r.e = g.edge_count();
  r.b = betti(g);
  r.genus = genus(g);
  r.stable = is_stable(g);
  r.bridges = bridges(g);
  r.psi_from_determinant = psi_det(cycle_form(g, fundamental_cycle_basis(g)));
  r.psi_from_trees = psi_trees(g);
  r.psi_routes_agree = r.psi_from_determinant == r.psi_from_trees;
  r.has_cycles = r.b > 0;
  if (!r.has_cycles) return r;

  Threshold th = threshold(g);
  const Multigraph& core = th.reduction.core;
  r.c = th.c;
  r.certificate = std::move(th.certificate);
  r.core_ratio = ratio(core.edge_count(), betti(core));
  r.core_optimal = r.c == r.core_ratio;
  try {
    r.contraction = optimal_contraction(core);
    r.contraction_verified = r.contraction.c == r.c;
  } catch (const InternalError& err) {
    r.contraction_verified = false;
    r.contraction_error = err.what();
  }
  r.core = core;

  if (options.with_probe) {
    const int limit =
        options.probe.method == ProbeMethod::monte_carlo ? kMaxMonteCarloEdges : kMaxQuadratureEdges;
    if (core.edge_count() > limit) {
      r.probe_note = "probe skipped: core has " + std::to_string(core.edge_count()) + " edges, limit " +
                     std::to_string(limit);
    } else {
      const IntPolynomial psi = psi_trees(core);
      for (const mpq_class& s : {mpq_class(r.c), mpq_class(r.c + mpq_class(1, 2))}) {
        ProbeConfig cfg = options.probe;
        cfg.s = s.get_d();
        r.probes.push_back({cfg.s, truncated_J(psi, cfg)});
      }
    }
  }
  return r;
}

}  // namespace modgraph
