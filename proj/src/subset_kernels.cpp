#include "modgraph/subset_kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "modgraph/errors.hpp"

namespace modgraph::kernels {

std::vector<std::uint8_t> corank_table(int vertex_count, std::span<const Edge> edges) {
  const int e = static_cast<int>(edges.size());
  if (e > kMaxSubsetEdges) throw GuardError("subset scan limited to 20 edges");
  const std::size_t subsets = std::size_t{1} << e;
  const std::size_t v = static_cast<std::size_t>(vertex_count);

  // Component labels of the spanning subgraph on each kept-edge set A,
  // built block by block: every A in [2^k, 2^(k+1)) extends A ^ 2^k by edge k.
  std::vector<std::uint8_t> labels(subsets * v);
  std::vector<std::uint8_t> comps(subsets);
  for (std::size_t x = 0; x < v; ++x) labels[x] = static_cast<std::uint8_t>(x);
  comps[0] = static_cast<std::uint8_t>(vertex_count);

  for (int k = 0; k < e; ++k) {
    const std::int64_t lo = std::int64_t{1} << k;
    const std::int64_t hi = lo << 1;
    const Edge edge = edges[k];
#pragma omp parallel for schedule(static)
    for (std::int64_t a = lo; a < hi; ++a) {
      const std::size_t parent = static_cast<std::size_t>(a - lo);
      const std::uint8_t* src = &labels[parent * v];
      std::uint8_t* dst = &labels[static_cast<std::size_t>(a) * v];
      std::copy(src, src + v, dst);
      const std::uint8_t lt = dst[edge.tail], lh = dst[edge.head];
      if (lt == lh) {
        comps[a] = comps[parent];
      } else {
        const std::uint8_t keep = std::min(lt, lh), drop = std::max(lt, lh);
        for (std::size_t x = 0; x < v; ++x)
          if (dst[x] == drop) dst[x] = keep;
        comps[a] = static_cast<std::uint8_t>(comps[parent] - 1);
      }
    }
  }

  const Mask full = static_cast<Mask>(subsets - 1);
  std::vector<std::uint8_t> table(subsets);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(subsets); ++s) {
    const Mask m = static_cast<Mask>(s);
    table[m] = static_cast<std::uint8_t>(std::popcount(m) - (comps[full & ~m] - 1));
  }
  return table;
}

DensityScan density_scan(std::span<const std::uint8_t> corank, int edge_count) {
  const std::int64_t subsets = std::int64_t{1} << edge_count;
  DensityScan best{0, 1, 0};
  bool loop_found = false;
#pragma omp parallel
  {
    DensityScan local{0, 1, 0};
    bool local_loop = false;
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 1; s < subsets; ++s) {
      const Mask m = static_cast<Mask>(s);
      const int size = std::popcount(m);
      const int rank = corank[m];
      if (rank == 0) {
        local_loop = true;
        continue;
      }
      const long lhs = static_cast<long>(size) * local.denominator;
      const long rhs = static_cast<long>(local.numerator) * rank;
      if (lhs > rhs) local = {size, rank, m};
      else if (lhs == rhs) local.maximizer_union |= m;
    }
#pragma omp critical(modgraph_density_reduce)
    {
      loop_found = loop_found || local_loop;
      const long lhs = static_cast<long>(local.numerator) * best.denominator;
      const long rhs = static_cast<long>(best.numerator) * local.denominator;
      if (local.numerator > 0) {
        if (lhs > rhs) best = local;
        else if (lhs == rhs) best.maximizer_union |= local.maximizer_union;
      }
    }
  }
  if (loop_found) throw InternalError("matroid has a loop (rank-0 singleton)");
  const int g = std::gcd(best.numerator, best.denominator);
  best.numerator /= g;
  best.denominator /= g;
  return best;
}

SlackScan slack_scan(std::span<const std::uint8_t> corank, std::span<const std::int64_t> weights, std::int64_t scale,
                     int focus_edge) {
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  const int e = static_cast<int>(weights.size());
  const std::int64_t subsets = std::int64_t{1} << e;
  const Mask full = static_cast<Mask>(subsets - 1);
  SlackScan out{kMax, 0, 0, kMax, kMax, 0};
#pragma omp parallel
  {
    SlackScan local{kMax, 0, 0, kMax, kMax, 0};
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 0; s < subsets; ++s) {
      const Mask m = static_cast<Mask>(s);
      std::int64_t phi = 0;
      for (Mask rest = m; rest; rest &= rest - 1) phi += weights[std::countr_zero(rest)];
      const std::int64_t slack = scale * corank[m] - phi;
      // Static schedule visits masks in increasing order per thread, so
      // strict comparison keeps the smallest mask of each chunk.
      if (slack < local.min_slack) {
        local.min_slack = slack;
        local.min_slack_set = m;
      }
      if (slack == 0) local.tight_union |= m;
      local.min_weight_sum = std::min(local.min_weight_sum, phi);
      if (focus_edge >= 0 && (m >> focus_edge & 1)) local.min_slack_with_focus = std::min(local.min_slack_with_focus, slack);
      if (m == full) local.full_set_slack = slack;
    }
#pragma omp critical(modgraph_slack_reduce)
    {
      if (local.min_slack < out.min_slack ||
          (local.min_slack == out.min_slack && local.min_slack_set < out.min_slack_set)) {
        out.min_slack = local.min_slack;
        out.min_slack_set = local.min_slack_set;
      }
      out.tight_union |= local.tight_union;
      out.min_weight_sum = std::min(out.min_weight_sum, local.min_weight_sum);
      out.min_slack_with_focus = std::min(out.min_slack_with_focus, local.min_slack_with_focus);
      if (local.full_set_slack != 0) out.full_set_slack = local.full_set_slack;
    }
  }
  return out;
}

}  // namespace modgraph::kernels
