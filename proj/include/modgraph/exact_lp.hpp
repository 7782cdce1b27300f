#pragma once

#include <gmpxx.h>

#include <vector>

namespace modgraph {

struct LpSolution {
  mpq_class value;
  std::vector<mpq_class> primal;
  /// One multiplier per constraint row.
  std::vector<mpq_class> dual;
};

/// minimize cost . x subject to rows . x >= rhs, x >= 0, with rhs >= 0.
///
/// Dense two-phase tableau simplex over the rationals with Bland's rule.
/// Throws GraphError for infeasible or unbounded programs.
LpSolution solve_min_ge(const std::vector<std::vector<mpq_class>>& rows, const std::vector<mpq_class>& rhs,
                        const std::vector<mpq_class>& cost);

}  // namespace modgraph
