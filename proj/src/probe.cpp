#include "modgraph/probe.hpp"

#include <omp.h>

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "modgraph/kirchhoff.hpp"
#include "probe_strata.hpp"

namespace modgraph {

std::string to_string(ProbeMethod m) { return m == ProbeMethod::monte_carlo ? "monte_carlo" : "tensor_quadrature"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::saturating: return "saturating";
    case Verdict::diverging: return "diverging";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<double> ProbeConfig::default_r_grid() {
  return {std::exp(4.0), std::exp(6.0), std::exp(8.0), std::exp(10.0)};
}

std::vector<ShellEstimate> estimate_shells(const CompiledPolynomial& psi, double s, std::span<const double> log_grid,
                                           std::size_t samples, std::uint64_t seed) {
  const auto strata = detail::build_strata(psi.variables(), log_grid, samples, seed);
  const std::int64_t count = static_cast<std::int64_t>(strata.size());
  std::vector<ShellEstimate> per(strata.size());
  bool failed = false;
  std::string failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      per[i] = detail::estimate_stratum(psi, s, strata[i]);
    } catch (const std::exception& err) {
#pragma omp critical(modgraph_probe_failure)
      {
        failed = true;
        failure = err.what();
      }
    }
  }
  if (failed) throw InternalError(failure);
  return detail::reduce_strata(strata, per, log_grid.size());
}

namespace {

template <std::size_t N>
std::vector<std::pair<double, double>> legendre_rule() {
  using Rule = boost::math::quadrature::gauss<double, N>;
  std::vector<std::pair<double, double>> nodes;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    nodes.emplace_back(x[i], w[i]);
    if (x[i] != 0) nodes.emplace_back(-x[i], w[i]);
  }
  return nodes;
}

/// int over [0, L]^dim of the log-coordinate integrand, tensor Gauss-Legendre.
double tensor_box(const CompiledPolynomial& psi, double s, double length) {
  static const auto rule = legendre_rule<kQuadratureNodes>();
  const int dim = psi.variables();
  const std::size_t n = rule.size();
  std::size_t points = 1;
  for (int d = 0; d < dim; ++d) points *= n;
  const double half = length / 2;
  double total = 0;
  bool failed = false;
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(points); ++p) {
    std::vector<double> u(static_cast<std::size_t>(dim)), scratch(static_cast<std::size_t>(dim));
    std::size_t rest = static_cast<std::size_t>(p);
    double weight = 1;
    for (int d = 0; d < dim; ++d) {
      const auto& [x, w] = rule[rest % n];
      rest /= n;
      u[d] = half * (1 + x);
      weight *= half * w;
    }
    try {
      total += weight * detail::log_integrand(psi, s, u, scratch);
    } catch (const std::exception&) {
#pragma omp atomic write
      failed = true;
    }
  }
  if (failed) throw InternalError("Kirchhoff polynomial is not positive on the orthant");
  return total;
}

void validate(const ProbeConfig& cfg, int dim) {
  if (!std::isfinite(cfg.s)) throw GraphError("probe exponent s must be finite");
  if (dim < 1) throw GraphError("probe needs at least one integration variable");
  if (cfg.r_grid.size() < 3) throw GraphError("R grid needs at least three box sizes");
  for (std::size_t i = 0; i < cfg.r_grid.size(); ++i) {
    if (!(cfg.r_grid[i] >= std::numbers::e - 1e-12)) throw GraphError("R grid entries must be >= e");
    if (i > 0 && !(cfg.r_grid[i] > cfg.r_grid[i - 1])) throw GraphError("R grid must be strictly increasing");
  }
  if (cfg.method == ProbeMethod::monte_carlo) {
    if (cfg.samples < 1000) throw GraphError("Monte Carlo probe needs at least 1000 samples per box");
    if (dim > kMaxMonteCarloEdges) throw GuardError("Monte Carlo probe limited to 6 variables");
  } else if (dim > kMaxQuadratureEdges) {
    throw GuardError("tensor quadrature probe limited to 4 variables");
  }
}

}  // namespace

Verdict classify_growth(std::span<const double> increments, std::span<const double> increment_stderrs,
                        double* ratio_out) {
  if (increments.size() < 2) return Verdict::inconclusive;
  const std::size_t last = increments.size() - 1;
  const double prev = increments[last - 1], tail = increments[last];
  const double ratio = prev > 0 ? tail / prev : std::numeric_limits<double>::quiet_NaN();
  if (ratio_out) *ratio_out = ratio;
  for (std::size_t k : {last - 1, last}) {
    if (!(increments[k] > 0)) return Verdict::inconclusive;
    if (increment_stderrs[k] > kMaxRelativeStderr * increments[k]) return Verdict::inconclusive;
  }
  if (ratio < kSaturatingRatio) return Verdict::saturating;
  if (ratio >= kDivergingRatio) return Verdict::diverging;
  return Verdict::inconclusive;
}

GrowthVerdict truncated_J(const IntPolynomial& psi, const ProbeConfig& cfg) {
  const int dim = psi.variables();
  validate(cfg, dim);
  const CompiledPolynomial compiled(psi);
  std::vector<double> log_grid;
  for (double r : cfg.r_grid) log_grid.push_back(std::log(r));

  GrowthVerdict out;
  out.r_grid = cfg.r_grid;
  out.method = cfg.method;
  if (cfg.method == ProbeMethod::monte_carlo) {
    const auto shells = estimate_shells(compiled, cfg.s, log_grid, cfg.samples, cfg.seed);
    double value = 0, variance = 0;
    for (std::size_t k = 0; k < shells.size(); ++k) {
      value += shells[k].value;
      variance += shells[k].variance;
      out.values.push_back(value);
      out.stderrs.push_back(std::sqrt(variance));
      if (k > 0) {
        out.increments.push_back(shells[k].value);
        out.increment_stderrs.push_back(std::sqrt(shells[k].variance));
      }
    }
  } else {
    for (double l : log_grid) {
      out.values.push_back(tensor_box(compiled, cfg.s, l));
      out.stderrs.push_back(0);
    }
    for (std::size_t k = 1; k < out.values.size(); ++k) {
      out.increments.push_back(out.values[k] - out.values[k - 1]);
      out.increment_stderrs.push_back(0);
    }
  }
  out.verdict = classify_growth(out.increments, out.increment_stderrs, &out.decay_ratio);
  return out;
}

GrowthVerdict truncated_J(const Multigraph& g, const ProbeConfig& cfg) {
  if (!bridges(g).empty()) throw GraphError("probe needs a bridgeless graph; contract bridges first");
  return truncated_J(psi_trees(g), cfg);
}

namespace {

long double binomial(int n, int k) {
  long double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long double factorial(int n) {
  long double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// An n-th antiderivative of t^-s, modulo polynomials of degree < n.
long double nth_antiderivative(int n, int s, long double t) {
  if (s >= 1 && s <= n) {
    const int p = n - s;
    const long double sign = (s - 1) % 2 ? -1.0L : 1.0L;
    return sign / (factorial(p) * factorial(s - 1)) * std::pow(t, static_cast<long double>(p)) * std::log(t);
  }
  long double denom = 1;
  for (int j = 1; j <= n; ++j) denom *= static_cast<long double>(j - s);
  return std::pow(t, static_cast<long double>(n - s)) / denom;
}

void validate_model(int n, double r) {
  if (n < 1) throw GraphError("model integral needs n >= 1");
  if (!(r > std::numbers::e)) throw GraphError("model integral needs R > e");
}

}  // namespace

double model_integral(int n, ModelMode mode, double s, double r) {
  validate_model(n, r);
  if (mode == ModelMode::product) {
    const long double one = s == 1.0 ? std::log(static_cast<long double>(r))
                                     : (std::pow(static_cast<long double>(r), 1.0L - s) - 1.0L) / (1.0L - s);
    return static_cast<double>(std::pow(one, static_cast<long double>(n)));
  }
  const double rounded = std::round(s);
  if (std::abs(s - rounded) > 1e-12) return model_integral_quadrature(n, mode, s, r);
  // n-fold finite difference of the n-th antiderivative, corners (k R + (n - k)).
  const int si = static_cast<int>(rounded);
  long double total = 0;
  for (int k = 0; k <= n; ++k) {
    const long double corner = static_cast<long double>(k) * r + (n - k);
    const long double sign = (n - k) % 2 ? -1.0L : 1.0L;
    total += sign * binomial(n, k) * nth_antiderivative(n, si, corner);
  }
  return static_cast<double>(total);
}

double model_integral_quadrature(int n, ModelMode mode, double s, double r) {
  validate_model(n, r);
  if (n > 3) throw GuardError("model quadrature limited to n <= 3");
  static const auto rule = legendre_rule<10>();
  const double length = std::log(r);
  const int panels = std::max(1, static_cast<int>(std::ceil(length)));
  const double width = length / panels;
  std::vector<std::pair<double, double>> axis;
  for (int p = 0; p < panels; ++p)
    for (const auto& [x, w] : rule) axis.emplace_back(width * (p + 0.5 * (1 + x)), 0.5 * width * w);

  const std::size_t m = axis.size();
  std::size_t points = 1;
  for (int d = 0; d < n; ++d) points *= m;
  long double total = 0;
  for (std::size_t p = 0; p < points; ++p) {
    std::size_t rest = p;
    long double weight = 1, log_jacobian = 0, sum = 0, log_product = 0;
    for (int d = 0; d < n; ++d) {
      const auto& [u, w] = axis[rest % m];
      rest /= m;
      weight *= w;
      log_jacobian += u;
      sum += std::exp(static_cast<long double>(u));
      log_product += u;
    }
    const long double log_denominator = mode == ModelMode::sum ? std::log(sum) : log_product;
    total += weight * std::exp(log_jacobian - s * log_denominator);
  }
  return static_cast<double>(total);
}

}  // namespace modgraph
