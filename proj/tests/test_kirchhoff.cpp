#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "modgraph/convergence.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/kirchhoff.hpp"
#include "modgraph/selftest.hpp"
#include "oracles.hpp"

using namespace modgraph;

namespace {

Multigraph theta() { return Multigraph::with_vertices(2, {{0, 1}, {0, 1}, {0, 1}}); }
Multigraph k4() { return Multigraph::with_vertices(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

/// Polynomial from the brute-force tree enumeration.
IntPolynomial oracle_psi(const Multigraph& g) {
  IntPolynomial p(g.edge_count());
  for (const auto& [mask, coeff] : oracle::psi_terms(g)) {
    Exponents x(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) x[e] = (mask >> e) & 1;
    p.add_term(x, coeff);
  }
  return p;
}

}  // namespace

TEST_CASE("cycle form entries") {
  const CycleForm p3 = cycle_form(make_ngon(3), fundamental_cycle_basis(make_ngon(3)));
  CHECK(p3.matrix[0][0].to_string() == "x0 + x1 + x2");

  const CycleForm t = cycle_form(theta(), fundamental_cycle_basis(theta()));
  CHECK(t.matrix[0][0].to_string() == "x0 + x1");
  CHECK(t.matrix[0][1].to_string() == "x0");
  CHECK(t.matrix[1][0].to_string() == "x0");
  CHECK(t.matrix[1][1].to_string() == "x0 + x2");

  const Multigraph loop = Multigraph::with_vertices(1, {{0, 0}});
  CHECK(cycle_form(loop, fundamental_cycle_basis(loop)).matrix[0][0].to_string() == "x0");

  CycleBasis broken = fundamental_cycle_basis(theta());
  broken.cycles.pop_back();
  CHECK_THROWS(cycle_form(theta(), broken));
}

TEST_CASE("Kirchhoff polynomial of the standard examples") {
  CHECK(psi_trees(make_ngon(3)).to_string() == "x0 + x1 + x2");
  CHECK(psi_det(cycle_form(theta(), fundamental_cycle_basis(theta()))).to_string() == "x0*x1 + x0*x2 + x1*x2");
  const Multigraph path = Multigraph::with_vertices(3, {{0, 1}, {1, 2}});
  CHECK(psi_det(cycle_form(path, fundamental_cycle_basis(path))) == IntPolynomial::constant(2, 1));
  const IntPolynomial square = psi_trees(make_doubled_2ngon(2));
  CHECK(square.is_homogeneous());
  CHECK(square.total_degree() == 3);
  CHECK(square.term_count() == spanning_trees(make_doubled_2ngon(2)).size());
}

TEST_CASE("determinant and tree routes agree with the brute-force expansion") {
  std::vector<Multigraph> graphs = small_multigraphs(4);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 80; ++i) graphs.push_back(random_multigraph(rng, 9, false));
  graphs.push_back(k4());
  graphs.push_back(make_doubled_2ngon(3));
  for (const Multigraph& g : graphs) {
    const IntPolynomial trees = psi_trees(g);
    const CycleForm form = cycle_form(g, fundamental_cycle_basis(g));
    CHECK(trees == oracle_psi(g));
    CHECK(psi_det_bareiss(form) == trees);
    if (form.size() <= 4) CHECK(psi_det_cofactor(form) == trees);
    CHECK(trees.total_degree() == betti(g));
    for (const auto& [x, c] : trees.terms()) {
      CHECK(c == 1);
      for (auto k : x) CHECK(k <= 1);
      for (EdgeId b : bridges(g)) CHECK(x[b] == 0);
    }
  }
}

TEST_CASE("basis independence") {
  const Multigraph g = k4();
  const IntPolynomial reference = psi_det(cycle_form(g, fundamental_cycle_basis(g)));
  for (const EdgeSet& tree : spanning_trees(g)) {
    const CycleBasis basis = fundamental_cycle_basis(g, tree);
    CHECK(psi_det_bareiss(cycle_form(g, basis)) == reference);
    CHECK(psi_det_cofactor(cycle_form(g, basis)) == reference);
  }
}

TEST_CASE("substitution into the contracted polynomial") {
  // A spanning tree of G meets the kept edges in a connected spanning
  // subgraph of the contraction, so every term of psi(G) with the
  // contracted variables frozen divides some term of psi of the contraction.
  std::vector<Multigraph> graphs = {make_doubled_2ngon(2), make_doubled_2ngon(3), make_doubled_2ngon(4)};
  for (const CorpusEntry& entry : acceptance_corpus()) graphs.push_back(contract_bridges(entry.graph).core);
  bool saw_constant_image = false;
  for (const Multigraph& g : graphs) {
    const OptimalContraction oc = optimal_contraction(g);
    const IntPolynomial big = psi_trees(g), small = psi_trees(oc.graph);
    for (const auto& [x, c] : big.terms()) {
      Exponents image(static_cast<std::size_t>(oc.graph.edge_count()), 0);
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (oc.edge_map[e] >= 0) image[oc.edge_map[e]] = x[e];
      const bool divides = std::any_of(small.terms().begin(), small.terms().end(), [&](const auto& term) {
        for (std::size_t k = 0; k < image.size(); ++k)
          if (image[k] > term.first[k]) return false;
        return true;
      });
      CHECK(divides);
      if (std::all_of(image.begin(), image.end(), [](auto k) { return k == 0; })) saw_constant_image = true;
    }
  }
  // The image need not itself be a term: on the doubled 2n-gon a tree can
  // avoid every kept edge's variable.
  CHECK(saw_constant_image);
}

TEST_CASE("inverse decay") {
  const CycleForm p3 = cycle_form(make_ngon(3), fundamental_cycle_basis(make_ngon(3)));
  const double ones[] = {1, 1, 1};
  const double grid[] = {1, 10, 100};
  const auto v = inverse_decay_check(p3, ones, grid);
  CHECK(v[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(v[1] == doctest::Approx(1.0 / 30).epsilon(1e-12));
  CHECK(v[2] == doctest::Approx(1.0 / 300).epsilon(1e-12));

  for (const Multigraph& g : {theta(), k4()}) {
    const CycleForm form = cycle_form(g, fundamental_cycle_basis(g));
    std::vector<double> dir(static_cast<std::size_t>(g.edge_count()));
    for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = 0.5 + static_cast<double>(i);
    const double ts[] = {1, 2, 4, 8};
    const auto w = inverse_decay_check(form, dir, ts);
    for (int k = 1; k < 4; ++k) CHECK(w[k] == doctest::Approx(w[k - 1] / 2).epsilon(1e-12));
  }

  const double bad_dir[] = {1, 0, 1};
  CHECK_THROWS(inverse_decay_check(p3, bad_dir, grid));
  const double bad_grid[] = {10, 1};
  CHECK_THROWS(inverse_decay_check(p3, ones, bad_grid));
}
