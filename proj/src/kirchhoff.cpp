#include "modgraph/kirchhoff.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "modgraph/errors.hpp"

namespace modgraph {

CycleForm cycle_form(const Multigraph& g, const CycleBasis& basis) {
  const int e = g.edge_count();
  const int b = basis.rows();
  if (b != betti(g)) throw GraphError("cycle basis has the wrong number of rows");
  for (const auto& row : basis.cycles)
    if (static_cast<int>(row.size()) != e) throw GraphError("cycle basis row length differs from edge count");

  CycleForm form;
  form.variables = e;
  form.matrix.assign(static_cast<std::size_t>(b), std::vector<IntPolynomial>(static_cast<std::size_t>(b), IntPolynomial(e)));
  std::vector<long> coeff(static_cast<std::size_t>(e));
  for (int i = 0; i < b; ++i) {
    for (int j = i; j < b; ++j) {
      for (int k = 0; k < e; ++k) coeff[k] = static_cast<long>(basis.cycles[i][k]) * basis.cycles[j][k];
      form.matrix[i][j] = IntPolynomial::linear(coeff);
      form.matrix[j][i] = form.matrix[i][j];
    }
  }
  return form;
}

namespace {

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

IntPolynomial cofactor(const PolyMatrix& m, int variables) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial::constant(variables, 1);
  if (n == 1) return m[0][0];
  IntPolynomial det(variables);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<IntPolynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    IntPolynomial term = m[0][col] * cofactor(minor, variables);
    if (col % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace

IntPolynomial psi_det_cofactor(const CycleForm& form) { return cofactor(form.matrix, form.variables); }

IntPolynomial psi_det_bareiss(const CycleForm& form) {
  const int n = form.size();
  if (n == 0) return IntPolynomial::constant(form.variables, 1);
  PolyMatrix m = form.matrix;
  IntPolynomial previous = IntPolynomial::constant(form.variables, 1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap_with = -1;
      for (int r = k + 1; r < n && swap_with < 0; ++r)
        if (!m[r][k].is_zero()) swap_with = r;
      if (swap_with < 0) return IntPolynomial(form.variables);
      std::swap(m[k], m[swap_with]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        IntPolynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.divide_exact(previous);
      }
    }
    previous = m[k][k];
  }
  IntPolynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

IntPolynomial psi_det(const CycleForm& form) {
  return form.size() <= 4 ? psi_det_cofactor(form) : psi_det_bareiss(form);
}

IntPolynomial psi_trees(const Multigraph& g) {
  const int e = g.edge_count();
  IntPolynomial psi(e);
  for (const EdgeSet& tree : spanning_trees(g)) {
    Exponents x(static_cast<std::size_t>(e), 1);
    for (EdgeId id : tree) x[id] = 0;
    psi.add_term(x, 1);
  }
  return psi;
}

std::vector<double> inverse_decay_check(const CycleForm& form, std::span<const double> direction,
                                        std::span<const double> t_grid) {
  if (static_cast<int>(direction.size()) != form.variables) throw GraphError("direction has the wrong length");
  for (double d : direction)
    if (!(d > 0)) throw GraphError("direction must be strictly positive");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 1)) throw GraphError("t_grid entries must be >= 1");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) throw GraphError("t_grid must be increasing");
  }

  const int b = form.size();
  std::vector<double> out;
  std::vector<double> x(direction.size());
  for (double t : t_grid) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = t * direction[k];
    Eigen::MatrixXd a(b, b);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) a(i, j) = static_cast<double>(eval_poly(form.matrix[i][j], x));
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    if (!(lu.rcond() > 1e-12)) throw InternalError("cycle form is numerically singular");
    Eigen::MatrixXd inv = lu.inverse();
    out.push_back(b == 0 ? 0.0 : inv.cwiseAbs().maxCoeff());
  }
  return out;
}

}  // namespace modgraph
