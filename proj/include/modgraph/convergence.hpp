#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "modgraph/graph.hpp"
#include "modgraph/matroid.hpp"
#include "modgraph/polynomial.hpp"
#include "modgraph/probe.hpp"

namespace modgraph {

/// Cycle of length n >= 2 with edges i -> i+1 (mod n).
Multigraph make_ngon(int n);

/// 2n-gon (n >= 1) whose odd-indexed sides are doubled: e = 3n, b = n + 1.
/// Edge order walks the cycle; a doubled side contributes two consecutive ids.
Multigraph make_doubled_2ngon(int n);

struct BridgeReduction {
  EdgeSet bridges;
  /// g with all bridges contracted; bridgeless.
  Multigraph core;
  /// g edge id -> core edge id, -1 for bridges.
  std::vector<EdgeId> edge_map;
};

BridgeReduction contract_bridges(const Multigraph& g);

struct Threshold {
  mpq_class c;
  /// Certificate in the edge ids of `reduction.core`.
  DensityCertificate certificate;
  BridgeReduction reduction;
};

/// c of the bridge-contracted core. Throws TreeInputError when every edge
/// is a bridge.
Threshold threshold(const Multigraph& g);

struct OptimalContraction {
  /// Contracted (or deleted, for loops) edge ids of the input.
  EdgeSet contracted;
  Multigraph graph;
  /// Input edge id -> edge id in `graph`, -1 if removed.
  std::vector<EdgeId> edge_map;
  mpq_class c;
};

/// Contracts the complement of the maximal densest set; the result is
/// optimal with the same threshold. Needs a bridgeless input. Throws
/// InternalError if the recheck on the quotient fails.
OptimalContraction optimal_contraction(const Multigraph& g);

/// c(g) for a bridgeless graph, via the density scan only (no witness).
mpq_class density_threshold(const Multigraph& bridgeless);

struct SearchHit {
  Multigraph graph;
  mpq_class c;
};

struct SearchLimits {
  static constexpr int kMinGenus = 2;
  static constexpr int kMaxGenus = 7;
  static constexpr int kMaxEdges = 15;
};

/// Stable (all genera 0, valence >= 3) bridgeless graphs of the given
/// genus with at most `max_edges` edges and c >= target, sorted by c
/// descending then edge count ascending. Duplicates are removed by an
/// invariant fingerprint only.
std::vector<SearchHit> search_divergent(int genus, int max_edges, const mpq_class& target);

struct ProbeSummary {
  double s = 0;
  GrowthVerdict verdict;
};

struct ConvergenceReport {
  explicit ConvergenceReport(Multigraph g)
      : input(std::move(g)), psi_from_determinant(input.edge_count()), psi_from_trees(input.edge_count()) {}

  Multigraph input;
  int v = 0, e = 0, b = 0, genus = 0;
  bool stable = false;
  EdgeSet bridges;
  /// Set only when the graph has a cycle.
  std::optional<Multigraph> core;
  IntPolynomial psi_from_determinant;
  IntPolynomial psi_from_trees;
  bool psi_routes_agree = false;
  bool has_cycles = false;
  /// Fields below are meaningful only when has_cycles.
  mpq_class c;
  DensityCertificate certificate;
  /// e'/b' of the bridgeless core.
  mpq_class core_ratio;
  bool core_optimal = false;
  OptimalContraction contraction{{}, Multigraph::with_vertices(1, {}), {}, 0};
  bool contraction_verified = false;
  /// Why the optimality recheck failed, when it did.
  std::string contraction_error;
  std::vector<ProbeSummary> probes;
  std::string probe_note;
};

struct AnalyzeOptions {
  bool with_probe = false;
  ProbeConfig probe;
  int max_edges = 20;
};

/// Full pipeline. Never throws for tree inputs; those get has_cycles = false.
ConvergenceReport analyze(const Multigraph& g, const AnalyzeOptions& options = {});

}  // namespace modgraph
