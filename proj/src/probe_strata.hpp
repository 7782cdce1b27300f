#pragma once

// Stratification shared by the OpenMP and serial shell estimators.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "modgraph/errors.hpp"
#include "modgraph/polynomial.hpp"
#include "modgraph/probe.hpp"
#include "splitmix.hpp"

namespace modgraph::detail {

inline constexpr double kMaxStratumWidth = 2.0;

/// xoshiro256** seeded through splitmix64; fixed output on every platform.
class StreamRng {
 public:
  explicit StreamRng(std::uint64_t seed) {
    for (auto& w : state_) w = seed = splitmix64(seed);
  }
  std::uint64_t next() {
    const std::uint64_t out = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return out;
  }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t state_[4];
};

struct Stratum {
  int shell;
  std::vector<double> lo, hi;
  double volume;
  std::size_t samples;
  std::uint64_t stream;
};

/// Axis pieces: [0, L_0], [L_0, L_1], ..., each split to width <= 2.
inline std::vector<std::pair<double, double>> axis_pieces(std::span<const double> log_grid) {
  std::vector<std::pair<double, double>> pieces;
  double prev = 0;
  for (double l : log_grid) {
    const int parts = std::max(1, static_cast<int>(std::ceil((l - prev) / kMaxStratumWidth - 1e-12)));
    for (int i = 0; i < parts; ++i)
      pieces.emplace_back(prev + (l - prev) * i / parts, prev + (l - prev) * (i + 1) / parts);
    prev = l;
  }
  return pieces;
}

inline std::vector<Stratum> build_strata(int dim, std::span<const double> log_grid, std::size_t samples,
                                         std::uint64_t seed) {
  const auto pieces = axis_pieces(log_grid);
  const std::size_t p = pieces.size();
  std::size_t cells = 1;
  for (int d = 0; d < dim; ++d) {
    cells *= p;
    if (cells > 2'000'000) throw GuardError("too many strata for the probe");
  }

  std::vector<Stratum> strata;
  std::vector<double> shell_volume(log_grid.size(), 0);
  std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
  for (std::size_t c = 0; c < cells; ++c) {
    std::size_t rest = c;
    Stratum s;
    s.lo.resize(dim);
    s.hi.resize(dim);
    s.volume = 1;
    double top = 0;
    for (int d = 0; d < dim; ++d) {
      idx[d] = rest % p;
      rest /= p;
      s.lo[d] = pieces[idx[d]].first;
      s.hi[d] = pieces[idx[d]].second;
      s.volume *= s.hi[d] - s.lo[d];
      top = std::max(top, s.hi[d]);
    }
    s.shell = 0;
    while (top > log_grid[s.shell] + 1e-9) ++s.shell;
    s.stream = splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(s.shell) << 40) ^ c));
    shell_volume[s.shell] += s.volume;
    strata.push_back(std::move(s));
  }
  for (Stratum& s : strata) {
    const double share = static_cast<double>(samples) * s.volume / shell_volume[s.shell];
    s.samples = std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(share)));
  }
  return strata;
}

/// exp(sum u) / psi(exp(u))^s, the integrand after y = exp(u).
inline double log_integrand(const CompiledPolynomial& psi, double s, std::span<const double> u,
                            std::span<double> scratch) {
  double log_jacobian = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    scratch[i] = std::exp(u[i]);
    log_jacobian += u[i];
  }
  const long double value = psi(scratch);
  if (!(value > 0)) throw InternalError("Kirchhoff polynomial is not positive on the orthant");
  return std::exp(log_jacobian - s * static_cast<double>(std::log(value)));
}

inline ShellEstimate estimate_stratum(const CompiledPolynomial& psi, double s, const Stratum& st) {
  const std::size_t dim = st.lo.size();
  StreamRng rng(st.stream);
  std::vector<double> u(dim), scratch(dim);
  double mean = 0, m2 = 0;
  for (std::size_t i = 0; i < st.samples; ++i) {
    for (std::size_t d = 0; d < dim; ++d) u[d] = st.lo[d] + (st.hi[d] - st.lo[d]) * rng.uniform();
    const double f = log_integrand(psi, s, u, scratch);
    const double delta = f - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (f - mean);
  }
  const double n = static_cast<double>(st.samples);
  const double sample_var = m2 / (n - 1);
  return {st.volume * mean, st.volume * st.volume * sample_var / n};
}

inline std::vector<ShellEstimate> reduce_strata(const std::vector<Stratum>& strata,
                                                const std::vector<ShellEstimate>& per_stratum, std::size_t shells) {
  std::vector<ShellEstimate> out(shells);
  for (std::size_t i = 0; i < strata.size(); ++i) {
    out[strata[i].shell].value += per_stratum[i].value;
    out[strata[i].shell].variance += per_stratum[i].variance;
  }
  return out;
}

}  // namespace modgraph::detail
