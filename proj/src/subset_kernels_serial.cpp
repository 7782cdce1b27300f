#include <bit>
#include <limits>
#include <numeric>

#include "modgraph/errors.hpp"
#include "modgraph/subset_kernels.hpp"
#include "union_find.hpp"

namespace modgraph::kernels::serial {

std::vector<std::uint8_t> corank_table(int vertex_count, std::span<const Edge> edges) {
  const int e = static_cast<int>(edges.size());
  if (e > kMaxSubsetEdges) throw GuardError("subset scan limited to 20 edges");
  const Mask full = (Mask{1} << e) - 1;
  std::vector<std::uint8_t> table(std::size_t{1} << e);
  for (Mask s = 0; s <= full; ++s) {
    detail::UnionFind uf(vertex_count);
    int comps = vertex_count;
    for (int k = 0; k < e; ++k) {
      if (s >> k & 1) continue;
      if (uf.unite(edges[k].tail, edges[k].head)) --comps;
    }
    table[s] = static_cast<std::uint8_t>(std::popcount(s) - (comps - 1));
  }
  return table;
}

DensityScan density_scan(std::span<const std::uint8_t> corank, int edge_count) {
  const Mask full = (Mask{1} << edge_count) - 1;
  DensityScan best{0, 1, 0};
  for (Mask s = 1; s <= full; ++s) {
    const int size = std::popcount(s);
    const int rank = corank[s];
    if (rank == 0) throw InternalError("matroid has a loop (rank-0 singleton)");
    const long lhs = static_cast<long>(size) * best.denominator;
    const long rhs = static_cast<long>(best.numerator) * rank;
    if (lhs > rhs) {
      best = {size, rank, s};
    } else if (lhs == rhs) {
      best.maximizer_union |= s;
    }
  }
  const int g = std::gcd(best.numerator, best.denominator);
  best.numerator /= g;
  best.denominator /= g;
  return best;
}

SlackScan slack_scan(std::span<const std::uint8_t> corank, std::span<const std::int64_t> weights, std::int64_t scale,
                     int focus_edge) {
  const int e = static_cast<int>(weights.size());
  const Mask full = (Mask{1} << e) - 1;
  SlackScan out;
  out.min_slack = std::numeric_limits<std::int64_t>::max();
  out.min_weight_sum = std::numeric_limits<std::int64_t>::max();
  out.min_slack_with_focus = std::numeric_limits<std::int64_t>::max();
  for (Mask s = 0; s <= full; ++s) {
    std::int64_t phi = 0;
    for (Mask rest = s; rest; rest &= rest - 1) phi += weights[std::countr_zero(rest)];
    const std::int64_t slack = scale * corank[s] - phi;
    if (slack < out.min_slack) {
      out.min_slack = slack;
      out.min_slack_set = s;
    }
    if (slack == 0) out.tight_union |= s;
    if (phi < out.min_weight_sum) out.min_weight_sum = phi;
    if (focus_edge >= 0 && (s >> focus_edge & 1) && slack < out.min_slack_with_focus) out.min_slack_with_focus = slack;
    if (s == full) out.full_set_slack = slack;
  }
  return out;
}

}  // namespace modgraph::kernels::serial
