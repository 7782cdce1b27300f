#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "modgraph/graph.hpp"
#include "modgraph/polynomial.hpp"

namespace modgraph {

enum class ProbeMethod { monte_carlo, tensor_quadrature };
enum class Verdict { saturating, diverging, inconclusive };

std::string to_string(ProbeMethod m);
std::string to_string(Verdict v);

/// Numeric probe of F(R) = int_{[1,R]^e} dy / psi(y)^s.
struct ProbeConfig {
  double s = 0;
  /// Box sizes R_k, strictly increasing, each >= e (Euler's number).
  std::vector<double> r_grid = default_r_grid();
  /// Samples per shell (Monte Carlo) or nodes per axis (quadrature).
  std::size_t samples = 100000;
  std::uint64_t seed = 20240917;
  ProbeMethod method = ProbeMethod::monte_carlo;

  static std::vector<double> default_r_grid();
};

/// Verdict thresholds on the ratio of the last two increments.
inline constexpr double kSaturatingRatio = 0.6;
inline constexpr double kDivergingRatio = 0.85;
/// A verdict needs each of the last two increments resolved to this
/// relative standard error.
inline constexpr double kMaxRelativeStderr = 0.1;

inline constexpr int kMaxMonteCarloEdges = 6;
inline constexpr int kMaxQuadratureEdges = 4;
inline constexpr std::size_t kQuadratureNodes = 32;

struct GrowthVerdict {
  std::vector<double> r_grid;
  std::vector<double> values;
  std::vector<double> stderrs;
  /// increments[k] = values[k+1] - values[k].
  std::vector<double> increments;
  std::vector<double> increment_stderrs;
  /// increments[last] / increments[last - 1].
  double decay_ratio = 0;
  Verdict verdict = Verdict::inconclusive;
  ProbeMethod method = ProbeMethod::monte_carlo;
};

/// Contribution of one shell [0, L_k]^e \ [0, L_{k-1}]^e in log coordinates.
struct ShellEstimate {
  double value = 0;
  double variance = 0;
};

/// Stratified Monte Carlo over the shells of the log-coordinate grid.
/// Every stratum owns an RNG stream derived from (seed, shell, stratum), so
/// results do not depend on the number of worker threads.
std::vector<ShellEstimate> estimate_shells(const CompiledPolynomial& psi, double s, std::span<const double> log_grid,
                                           std::size_t samples, std::uint64_t seed);
namespace serial {
std::vector<ShellEstimate> estimate_shells(const CompiledPolynomial& psi, double s, std::span<const double> log_grid,
                                           std::size_t samples, std::uint64_t seed);
}

/// Applies the fixed ratio rule to the increments.
Verdict classify_growth(std::span<const double> increments, std::span<const double> increment_stderrs,
                        double* ratio_out = nullptr);

/// Probe on an explicit polynomial (variables = integration dimension).
GrowthVerdict truncated_J(const IntPolynomial& psi, const ProbeConfig& cfg);

/// Probe on the Kirchhoff polynomial of a bridgeless graph.
GrowthVerdict truncated_J(const Multigraph& g, const ProbeConfig& cfg);

enum class ModelMode { product, sum };

/// int_{[1,R]^n} dy / (y_1 ... y_n)^s  (product) or / (y_1 + ... + y_n)^s  (sum).
/// Sum mode with integer s uses the iterated antiderivative in closed form;
/// other s fall back to model_integral_quadrature.
double model_integral(int n, ModelMode mode, double s, double r);

/// Composite Gauss-Legendre in log coordinates; n <= 3.
double model_integral_quadrature(int n, ModelMode mode, double s, double r);

}  // namespace modgraph
