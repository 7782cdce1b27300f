#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "modgraph/graph.hpp"

namespace modgraph {

/// Cographic matroid of a connected bridgeless multigraph: bases are the
/// complements of spanning trees, rk(S) = |S| - (components(G - S) - 1).
///
/// The full rank table is built at construction when the graph has at most
/// 20 edges; subset-scan operations refuse larger ground sets.
class CographicMatroid {
 public:
  /// Throws GraphError if `g` has a bridge.
  explicit CographicMatroid(Multigraph g);

  const Multigraph& graph() const { return graph_; }
  int ground_size() const { return graph_.edge_count(); }
  /// rk(E) = betti(graph).
  int full_rank() const { return betti(graph_); }
  /// Rank of the graphic matroid on E, v - 1.
  int graphic_rank() const { return graph_.vertex_count() - 1; }

  bool has_rank_table() const { return !table_.empty(); }
  /// Indexed by subset bitmask. Throws GuardError above 20 edges.
  std::span<const std::uint8_t> rank_table() const;

 private:
  Multigraph graph_;
  std::vector<std::uint8_t> table_;
};

struct DensityCertificate {
  /// max |S| / rk(S) over nonempty S.
  mpq_class m;
  /// Union of all maximizers.
  EdgeSet t0;
  /// w >= 1 componentwise with w in m * P(M); empty until build_witness.
  std::vector<mpq_class> witness;
};

/// Rank in the cographic matroid; works for any ground-set size.
int corank(const CographicMatroid& m, const EdgeSet& s);

/// Exhaustive maximal density and its maximal attaining set.
DensityCertificate density(const CographicMatroid& m);

/// 0 <= phi_S(w) <= t rk(S) for all S and phi_E(w) = t rk(E), exactly.
bool in_scaled_polytope(const CographicMatroid& m, std::span<const mpq_class> w, const mpq_class& t);

/// Density certificate plus a witness built by iterative tightening from
/// the all-ones vector. Throws InternalError if the result fails its own
/// exhaustive verification.
DensityCertificate build_witness(const CographicMatroid& m);

/// Optimal covering by spanning-tree complements, solved exactly.
struct CoverSolution {
  mpq_class value;
  std::vector<EdgeSet> trees;
  /// Primal weights c_T, aligned with `trees`.
  std::vector<mpq_class> tree_weights;
  /// Dual edge weights y_e, certifying the lower bound.
  std::vector<mpq_class> edge_weights;
};

inline constexpr std::size_t kDefaultTreeGuard = 500;

/// Solves min sum c_T s.t. sum_T c_T 1[E \ T] >= 1, c >= 0. The returned
/// primal/dual pair is checked exactly before returning.
CoverSolution cover_lp_solve(const Multigraph& g, std::size_t tree_guard = kDefaultTreeGuard);
mpq_class cover_lp_oracle(const Multigraph& g, std::size_t tree_guard = kDefaultTreeGuard);

}  // namespace modgraph
