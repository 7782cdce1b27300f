#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "modgraph/graph.hpp"

namespace modgraph::detail {

/// Spanning-tree count of the multigraph on `vertex_count` vertices by the
/// matrix-tree theorem; 0 when disconnected. Loops are ignored.
mpz_class tree_count(int vertex_count, const std::vector<Edge>& edges);

/// Isomorphism-invariant key: (v, e, degree sequence, loop count, tree
/// count, multiset of per-edge deletion/contraction tree counts, colour
/// refinement hash). Equal graphs up to isomorphism give equal keys; the
/// converse is not guaranteed.
std::string fingerprint(const Multigraph& g);

}  // namespace modgraph::detail
