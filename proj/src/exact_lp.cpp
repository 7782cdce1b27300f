#include "modgraph/exact_lp.hpp"

#include "modgraph/errors.hpp"

namespace modgraph {

namespace {

class Tableau {
 public:
  Tableau(const std::vector<std::vector<mpq_class>>& rows, const std::vector<mpq_class>& rhs, std::size_t n)
      : m_(rows.size()), n_(n), width_(n + 2 * rows.size()) {
    t_.assign(m_, std::vector<mpq_class>(width_ + 1));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (rows[i].size() != n_) throw GraphError("constraint row has the wrong length");
      if (rhs[i] < 0) throw GraphError("right-hand side must be nonnegative");
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = rows[i][j];
      t_[i][n_ + i] = -1;       // surplus
      t_[i][n_ + m_ + i] = 1;   // artificial
      t_[i][width_] = rhs[i];
      basis_[i] = n_ + m_ + i;
    }
  }

  bool is_artificial(std::size_t j) const { return j >= n_ + m_ && j < width_; }

  /// Installs `cost` (length width_) as the objective and prices out the basis.
  void set_objective(const std::vector<mpq_class>& cost) {
    reduced_.assign(width_ + 1, 0);
    for (std::size_t j = 0; j < width_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const mpq_class& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) reduced_[j] -= cb * t_[i][j];
    }
  }

  /// Bland's rule; returns false if unbounded.
  bool run(bool allow_artificial) {
    for (;;) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) return true;
      std::size_t leave = m_;
      mpq_class best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        mpq_class ratio = t_[i][width_] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    const mpq_class p = t_[r][col];
    for (auto& x : t_[r]) x /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][col] == 0) continue;
      const mpq_class f = t_[i][col];
      for (std::size_t j = 0; j <= width_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    if (reduced_[col] != 0) {
      const mpq_class f = reduced_[col];
      for (std::size_t j = 0; j <= width_; ++j)
        if (t_[r][j] != 0) reduced_[j] -= f * t_[r][j];
    }
    basis_[r] = col;
  }

  /// Pivots basic artificials (all at zero) onto structural columns where possible.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (t_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  mpq_class objective() const { return -reduced_[width_]; }

  std::vector<mpq_class> primal() const {
    std::vector<mpq_class> x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_[i][width_];
    return x;
  }

  std::vector<mpq_class> dual() const {
    std::vector<mpq_class> y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = reduced_[n_ + i];
    return y;
  }

  std::size_t width() const { return width_; }

 private:
  std::size_t m_, n_, width_;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> reduced_;
};

}  // namespace

LpSolution solve_min_ge(const std::vector<std::vector<mpq_class>>& rows, const std::vector<mpq_class>& rhs,
                        const std::vector<mpq_class>& cost) {
  if (rows.size() != rhs.size()) throw GraphError("row/rhs count mismatch");
  const std::size_t n = cost.size();
  const std::size_t m = rows.size();
  Tableau tab(rows, rhs, n);

  std::vector<mpq_class> phase1(tab.width(), 0);
  for (std::size_t i = 0; i < m; ++i) phase1[n + m + i] = 1;
  tab.set_objective(phase1);
  tab.run(true);
  if (tab.objective() != 0) throw GraphError("linear program is infeasible");
  tab.drive_out_artificials();

  std::vector<mpq_class> phase2(tab.width(), 0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = cost[j];
  tab.set_objective(phase2);
  if (!tab.run(false)) throw GraphError("linear program is unbounded");

  return {tab.objective(), tab.primal(), tab.dual()};
}

}  // namespace modgraph
