#include <omp.h>

#include <cmath>

#include "doctest.h"
#include "modgraph/convergence.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/kirchhoff.hpp"
#include "modgraph/probe.hpp"

using namespace modgraph;

namespace {

Multigraph theta() { return Multigraph::with_vertices(2, {{0, 1}, {0, 1}, {0, 1}}); }

std::vector<double> log_grid() { return {4, 6, 8, 10}; }

}  // namespace

TEST_CASE("model integrals against hand-integrated forms") {
  for (double r : {10.0, 1e3, 1e6}) {
    CHECK(model_integral(1, ModelMode::product, 2, r) == doctest::Approx(1 - 1 / r).epsilon(1e-12));
    CHECK(model_integral(3, ModelMode::product, 1, r) == doctest::Approx(std::pow(std::log(r), 3)).epsilon(1e-12));
    CHECK(model_integral(1, ModelMode::sum, 3, r) == doctest::Approx((1 - 1 / (r * r)) / 2).epsilon(1e-12));
    // int int dy1 dy2 / (y1 + y2)^2 = ln((R + 1)^2 / (4 R)).
    CHECK(model_integral(2, ModelMode::sum, 2, r) ==
          doctest::Approx(std::log((r + 1) * (r + 1) / (4 * r))).epsilon(1e-10));
    // int int dy1 dy2 / (y1 + y2)^3 = 1/2 (1/2 - 2/(R + 1) + 1/(2R)).
    CHECK(model_integral(2, ModelMode::sum, 3, r) ==
          doctest::Approx(0.5 * (0.5 - 2 / (r + 1) + 1 / (2 * r))).epsilon(1e-10));
  }
  CHECK(model_integral(1, ModelMode::product, 2, 1e12) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("closed form and quadrature agree") {
  for (int n = 1; n <= 3; ++n) {
    for (int s : {n, n + 1}) {
      for (double r : {std::exp(4.0), std::exp(6.0)}) {
        const double exact = model_integral(n, ModelMode::sum, s, r);
        const double quad = model_integral_quadrature(n, ModelMode::sum, s, r);
        CHECK(quad == doctest::Approx(exact).epsilon(1e-6));
      }
    }
  }
  CHECK(model_integral(2, ModelMode::sum, 2.5, std::exp(4.0)) ==
        doctest::Approx(model_integral_quadrature(2, ModelMode::sum, 2.5, std::exp(4.0))));
  CHECK_THROWS_AS(model_integral(0, ModelMode::sum, 2, 10), GraphError);
  CHECK_THROWS_AS(model_integral(2, ModelMode::sum, 2, 2), GraphError);
  CHECK_THROWS_AS(model_integral_quadrature(4, ModelMode::sum, 2, 10), GuardError);
}

TEST_CASE("model growth at and above the critical exponent") {
  std::vector<double> at, above;
  for (int k : {4, 6, 8, 10}) {
    at.push_back(model_integral(2, ModelMode::sum, 2, std::exp(k)));
    above.push_back(model_integral(2, ModelMode::sum, 3, std::exp(k)));
  }
  std::vector<double> d_at, d_above, zeros(3, 0.0);
  for (int k = 1; k < 4; ++k) {
    d_at.push_back(at[k] - at[k - 1]);
    d_above.push_back(above[k] - above[k - 1]);
  }
  CHECK(d_at[2] == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(classify_growth(d_at, zeros) == Verdict::diverging);
  CHECK(classify_growth(d_above, zeros) == Verdict::saturating);
}

TEST_CASE("verdict rule") {
  const std::vector<double> zero(3, 0.0);
  double ratio = 0;
  CHECK(classify_growth(std::vector<double>{4, 2, 1}, zero, &ratio) == Verdict::saturating);
  CHECK(ratio == 0.5);
  CHECK(classify_growth(std::vector<double>{1, 1, 0.9}, zero) == Verdict::diverging);
  CHECK(classify_growth(std::vector<double>{1, 1, 0.85}, zero) == Verdict::diverging);
  CHECK(classify_growth(std::vector<double>{1, 1, 0.7}, zero) == Verdict::inconclusive);
  CHECK(classify_growth(std::vector<double>{1, 1, 0.6}, zero) == Verdict::inconclusive);
  CHECK(classify_growth(std::vector<double>{1, 1, 1}, std::vector<double>{0, 0, 0.2}) == Verdict::inconclusive);
  CHECK(classify_growth(std::vector<double>{1, 0, 0}, zero) == Verdict::inconclusive);
  CHECK(classify_growth(std::vector<double>{1}, zero) == Verdict::inconclusive);
}

TEST_CASE("shell estimates are independent of the thread count") {
  const CompiledPolynomial psi(psi_trees(theta()));
  const auto grid = log_grid();
  const auto serial = serial::estimate_shells(psi, 1.5, grid, 20000, 99);
  for (int threads : {1, 2, 3, 8}) {
    omp_set_num_threads(threads);
    const auto parallel = estimate_shells(psi, 1.5, grid, 20000, 99);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
      CHECK(parallel[k].value == serial[k].value);
      CHECK(parallel[k].variance == serial[k].variance);
    }
  }
  const auto other = estimate_shells(psi, 1.5, grid, 20000, 100);
  CHECK(other[1].value != serial[1].value);
}

TEST_CASE("single loop integrates exactly") {
  ProbeConfig cfg;
  cfg.s = 1.0;
  cfg.samples = 2000;
  const GrowthVerdict v = truncated_J(Multigraph::with_vertices(1, {{0, 0}}), cfg);
  for (std::size_t k = 0; k < v.values.size(); ++k) CHECK(v.values[k] == doctest::Approx(std::log(v.r_grid[k])));
  CHECK(v.verdict == Verdict::diverging);
}

TEST_CASE("doubling the coefficients scales F by 2^-s") {
  ProbeConfig cfg;
  cfg.s = 2.0;
  cfg.samples = 5000;
  const IntPolynomial psi = psi_trees(theta());
  const IntPolynomial twice = psi + psi;
  const GrowthVerdict a = truncated_J(psi, cfg), b = truncated_J(twice, cfg);
  for (std::size_t k = 0; k < a.values.size(); ++k)
    CHECK(b.values[k] == doctest::Approx(a.values[k] * std::pow(2.0, -cfg.s)).epsilon(1e-12));
}

TEST_CASE("Monte Carlo is monotone and matches tensor quadrature") {
  ProbeConfig mc;
  mc.s = 3.5;
  ProbeConfig quad = mc;
  quad.method = ProbeMethod::tensor_quadrature;
  const GrowthVerdict a = truncated_J(make_ngon(3), mc), b = truncated_J(make_ngon(3), quad);
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (k > 0) CHECK(a.values[k] >= a.values[k - 1] - 3 * a.stderrs[k]);
    CHECK(std::abs(a.values[k] - b.values[k]) <= 4 * a.stderrs[k] + 1e-6 * b.values[k]);
  }
  CHECK(b.verdict == Verdict::saturating);
}

TEST_CASE("probe configuration is validated") {
  ProbeConfig cfg;
  cfg.s = 2;
  cfg.r_grid = {10, 5, 100};
  CHECK_THROWS_AS(truncated_J(theta(), cfg), GraphError);
  cfg.r_grid = {2, 10, 100};
  CHECK_THROWS_AS(truncated_J(theta(), cfg), GraphError);
  cfg.r_grid = {10, 100};
  CHECK_THROWS_AS(truncated_J(theta(), cfg), GraphError);
  cfg = ProbeConfig{};
  cfg.samples = 10;
  CHECK_THROWS_AS(truncated_J(theta(), cfg), GraphError);
  cfg = ProbeConfig{};
  CHECK_THROWS_AS(truncated_J(make_doubled_2ngon(3), cfg), GuardError);
  cfg.method = ProbeMethod::tensor_quadrature;
  CHECK_THROWS_AS(truncated_J(make_ngon(5), cfg), GuardError);
  CHECK_THROWS_AS(truncated_J(Multigraph::with_vertices(3, {{0, 1}, {1, 2}, {2, 0}, {2, 2}, {0, 0}, {1, 1}, {0, 1}}), cfg),
                  GuardError);
  CHECK_THROWS_AS(truncated_J(Multigraph::with_vertices(2, {{0, 0}, {0, 1}, {1, 1}}), ProbeConfig{}), GraphError);
}
