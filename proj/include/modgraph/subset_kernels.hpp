#pragma once

// Exhaustive scans over all subsets of a small edge set.
//
// Every kernel comes in two flavours with identical results: the default
// OpenMP version used by the library, and a plain sequential reference in
// `serial::` that the tests and the benchmark compare against. Subsets are
// bitmasks; bit k is edge k.

#include <cstdint>
#include <span>
#include <vector>

#include "modgraph/graph.hpp"

namespace modgraph::kernels {

using Mask = std::uint32_t;

inline constexpr int kMaxSubsetEdges = 20;

/// Largest |S| / rk(S) over nonempty S, plus the union of all maximizers.
struct DensityScan {
  int numerator = 0;
  int denominator = 1;
  Mask maximizer_union = 0;

  friend bool operator==(const DensityScan&, const DensityScan&) = default;
};

/// Statistics of slack(S) = scale * rk(S) - sum_{e in S} weight[e].
struct SlackScan {
  std::int64_t min_slack = 0;
  /// Smallest mask attaining min_slack.
  Mask min_slack_set = 0;
  /// Union of all S with slack(S) == 0 (including the empty set).
  Mask tight_union = 0;
  /// Smallest weight sum over all S (lower polytope bound).
  std::int64_t min_weight_sum = 0;
  /// min slack(S) over S containing the focus edge; INT64_MAX without focus.
  std::int64_t min_slack_with_focus = 0;
  std::int64_t full_set_slack = 0;

  friend bool operator==(const SlackScan&, const SlackScan&) = default;
};

/// rk*(S) = |S| - (components(G - S) - 1) for every S, indexed by mask.
std::vector<std::uint8_t> corank_table(int vertex_count, std::span<const Edge> edges);

DensityScan density_scan(std::span<const std::uint8_t> corank, int edge_count);

/// `focus_edge` < 0 disables the focused minimum.
SlackScan slack_scan(std::span<const std::uint8_t> corank, std::span<const std::int64_t> weights, std::int64_t scale,
                     int focus_edge);

namespace serial {

std::vector<std::uint8_t> corank_table(int vertex_count, std::span<const Edge> edges);
DensityScan density_scan(std::span<const std::uint8_t> corank, int edge_count);
SlackScan slack_scan(std::span<const std::uint8_t> corank, std::span<const std::int64_t> weights, std::int64_t scale,
                     int focus_edge);

}  // namespace serial

}  // namespace modgraph::kernels
