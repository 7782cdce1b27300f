#pragma once

#include <span>
#include <vector>

#include "modgraph/graph.hpp"
#include "modgraph/polynomial.hpp"

namespace modgraph {

/// Symmetric b x b matrix of linear forms, entry (i, j) = sum_e c_i(e) c_j(e) x_e.
struct CycleForm {
  int variables = 0;
  std::vector<std::vector<IntPolynomial>> matrix;

  int size() const { return static_cast<int>(matrix.size()); }
};

/// Intersection form of the cycles in `basis`.
CycleForm cycle_form(const Multigraph& g, const CycleBasis& basis);

/// Kirchhoff polynomial as det(form). Cofactor expansion up to 4x4,
/// fraction-free elimination above.
IntPolynomial psi_det(const CycleForm& form);
IntPolynomial psi_det_bareiss(const CycleForm& form);
IntPolynomial psi_det_cofactor(const CycleForm& form);

/// Kirchhoff polynomial as the sum over spanning trees of the product of
/// the complementary edge variables.
IntPolynomial psi_trees(const Multigraph& g);

/// Max |entry| of form(t * direction)^-1 for each t in `t_grid`.
std::vector<double> inverse_decay_check(const CycleForm& form, std::span<const double> direction,
                                        std::span<const double> t_grid);

}  // namespace modgraph
