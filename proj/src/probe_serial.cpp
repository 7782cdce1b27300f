#include "modgraph/probe.hpp"
#include "probe_strata.hpp"

namespace modgraph::serial {

std::vector<ShellEstimate> estimate_shells(const CompiledPolynomial& psi, double s, std::span<const double> log_grid,
                                           std::size_t samples, std::uint64_t seed) {
  const auto strata = detail::build_strata(psi.variables(), log_grid, samples, seed);
  std::vector<ShellEstimate> per(strata.size());
  for (std::size_t i = 0; i < strata.size(); ++i) per[i] = detail::estimate_stratum(psi, s, strata[i]);
  return detail::reduce_strata(strata, per, log_grid.size());
}

}  // namespace modgraph::serial
