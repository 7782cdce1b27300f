#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "modgraph/graph.hpp"

namespace modgraph {

struct CorpusEntry {
  std::string name;
  Multigraph graph;
};

/// Named test graphs: n-gons, theta, K4, doubled 2n-gons, two triangles
/// sharing a vertex or joined by a bridge, and seeded random bridgeless
/// graphs with at most 8 edges and 200 spanning trees.
std::vector<CorpusEntry> acceptance_corpus();

/// Every connected multigraph on at most `max_edges` edges, one per
/// labelled edge multiset (loops included, edges oriented tail <= head).
std::vector<Multigraph> small_multigraphs(int max_edges);

/// Connected multigraph with at most `max_edges` edges and random
/// orientations; retries until bridgeless when asked.
Multigraph random_multigraph(std::mt19937_64& rng, int max_edges, bool bridgeless);

inline constexpr std::uint64_t kCorpusSeed = 7;
inline constexpr std::uint64_t kIdentitySeed = 11;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestOptions {
  /// Skip the numeric probe criterion.
  bool quick = false;
  /// Criterion id whose expected value is deliberately corrupted; 0 for none.
  int inject_fault = 0;
  std::uint64_t probe_seed = 20240917;
};

std::vector<CriterionResult> run_selftest(const SelftestOptions& options, std::ostream* progress = nullptr);

/// One line: "PASS  3  doubled 2n-gon family ... (0.42 s)".
std::string format_result(const CriterionResult& r);

}  // namespace modgraph
