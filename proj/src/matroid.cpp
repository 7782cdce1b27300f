#include "modgraph/matroid.hpp"

#include <bit>
#include <numeric>

#include "modgraph/errors.hpp"
#include "modgraph/exact_lp.hpp"
#include "modgraph/subset_kernels.hpp"

namespace modgraph {

namespace {

using kernels::Mask;

EdgeSet from_mask(Mask m) {
  EdgeSet s;
  for (; m; m &= m - 1) s.push_back(std::countr_zero(m));
  return s;
}

mpz_class lcm_of_denominators(std::span<const mpq_class> w, const mpq_class& t) {
  mpz_class l = t.get_den();
  for (const mpq_class& x : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// Exact fallback for weights too large for the int64 kernel.
bool polytope_scan_mpz(std::span<const std::uint8_t> rank, const std::vector<mpz_class>& w, const mpz_class& t) {
  const int e = static_cast<int>(w.size());
  const Mask full = (Mask{1} << e) - 1;
  for (Mask s = 0; s <= full; ++s) {
    mpz_class phi = 0;
    for (Mask rest = s; rest; rest &= rest - 1) phi += w[std::countr_zero(rest)];
    const mpz_class cap = t * rank[s];
    if (phi < 0 || phi > cap) return false;
    if (s == full && phi != cap) return false;
  }
  return true;
}

}  // namespace

CographicMatroid::CographicMatroid(Multigraph g) : graph_(std::move(g)) {
  if (!bridges(graph_).empty()) throw GraphError("cographic matroid needs a bridgeless graph");
  if (graph_.edge_count() <= kernels::kMaxSubsetEdges)
    table_ = kernels::corank_table(graph_.vertex_count(), graph_.edges());
}

std::span<const std::uint8_t> CographicMatroid::rank_table() const {
  if (table_.empty()) throw GuardError("subset scans are limited to 20 edges; contract first");
  return table_;
}

int corank(const CographicMatroid& m, const EdgeSet& s) {
  const Multigraph& g = m.graph();
  std::vector<char> removed(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId id : s) {
    if (id < 0 || id >= g.edge_count()) throw GraphError("edge id out of range");
    removed[id] = 1;
  }
  EdgeSet kept;
  for (EdgeId id = 0; id < g.edge_count(); ++id)
    if (!removed[id]) kept.push_back(id);
  const int comps = component_count(g.vertex_count(), g.edges(), kept);
  return static_cast<int>(s.size()) - (comps - 1);
}

DensityCertificate density(const CographicMatroid& m) {
  if (m.ground_size() == 0) throw GraphError("density of an empty ground set");
  const auto scan = kernels::density_scan(m.rank_table(), m.ground_size());
  DensityCertificate cert;
  cert.m = mpq_class(scan.numerator, scan.denominator);
  cert.m.canonicalize();
  cert.t0 = from_mask(scan.maximizer_union);
  return cert;
}

bool in_scaled_polytope(const CographicMatroid& m, std::span<const mpq_class> w, const mpq_class& t) {
  if (static_cast<int>(w.size()) != m.ground_size()) throw GraphError("weight vector has the wrong length");
  const auto rank = m.rank_table();
  const mpz_class d = lcm_of_denominators(w, t);
  std::vector<mpz_class> scaled(w.size());
  mpz_class magnitude = abs(mpz_class(t * d)) * m.ground_size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    scaled[i] = mpz_class(w[i] * d);
    magnitude += abs(scaled[i]);
  }
  const mpz_class scaled_t = mpz_class(t * d);
  if (magnitude < mpz_class(1) << 60) {
    std::vector<std::int64_t> w64(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) w64[i] = scaled[i].get_si();
    const auto scan = kernels::slack_scan(rank, w64, scaled_t.get_si(), -1);
    return scan.min_weight_sum >= 0 && scan.min_slack >= 0 && scan.full_set_slack == 0;
  }
  return polytope_scan_mpz(rank, scaled, scaled_t);
}

DensityCertificate build_witness(const CographicMatroid& m) {
  DensityCertificate cert = density(m);
  const auto rank = m.rank_table();
  const int e = m.ground_size();
  const Mask full = (Mask{1} << e) - 1;

  // Work in units of 1/q where m = p/q: w = W/q keeps every step integral,
  // since each step size is a slack p*rk(S) - phi_S(W).
  const std::int64_t p = cert.m.get_num().get_si();
  const std::int64_t q = cert.m.get_den().get_si();
  std::vector<std::int64_t> w(static_cast<std::size_t>(e), q);

  Mask tight = 0;
  for (int steps = 0;; ++steps) {
    const auto scan = kernels::slack_scan(rank, w, p, -1);
    if (scan.min_slack < 0) throw InternalError("witness left the scaled polytope");
    const Mask now = scan.tight_union;
    std::int64_t union_slack = p * rank[now];
    for (Mask rest = now; rest; rest &= rest - 1) union_slack -= w[std::countr_zero(rest)];
    if (union_slack != 0) throw InternalError("union of tight sets is not tight");
    if (steps > 0 && (now & tight) != tight) throw InternalError("tight family shrank");
    if (steps > 0 && now == tight) throw InternalError("tight family did not grow");
    tight = now;
    if (tight == full) break;

    const int next = std::countr_zero(~tight);
    const auto focused = kernels::slack_scan(rank, w, p, next);
    if (focused.min_slack_with_focus <= 0) throw InternalError("no room to raise a non-tight coordinate");
    w[next] += focused.min_slack_with_focus;
  }

  cert.witness.resize(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    cert.witness[i] = mpq_class(w[i], q);
    cert.witness[i].canonicalize();
  }
  for (const mpq_class& x : cert.witness)
    if (x < 1) throw InternalError("witness coordinate below 1");
  if (!in_scaled_polytope(m, cert.witness, cert.m)) throw InternalError("witness failed polytope verification");
  return cert;
}

CoverSolution cover_lp_solve(const Multigraph& g, std::size_t tree_guard) {
  if (!bridges(g).empty()) throw GraphError("cover LP needs a bridgeless graph");
  if (g.edge_count() == 0) throw GraphError("cover LP needs at least one edge");
  CoverSolution sol;
  sol.trees = spanning_trees(g);
  if (sol.trees.size() > tree_guard)
    throw GuardError("cover LP: " + std::to_string(sol.trees.size()) + " spanning trees exceed the guard");

  const std::size_t e = static_cast<std::size_t>(g.edge_count());
  const std::size_t n = sol.trees.size();
  std::vector<std::vector<mpq_class>> rows(e, std::vector<mpq_class>(n, 1));
  for (std::size_t t = 0; t < n; ++t)
    for (EdgeId id : sol.trees[t]) rows[id][t] = 0;
  const std::vector<mpq_class> rhs(e, 1), cost(n, 1);

  LpSolution lp = solve_min_ge(rows, rhs, cost);
  sol.value = lp.value;
  sol.tree_weights = std::move(lp.primal);
  sol.edge_weights = std::move(lp.dual);

  // Independent exact check of both certificates.
  mpq_class total = 0;
  for (const mpq_class& c : sol.tree_weights) {
    if (c < 0) throw InternalError("negative tree weight");
    total += c;
  }
  if (total != sol.value) throw InternalError("primal objective mismatch");
  for (std::size_t i = 0; i < e; ++i) {
    mpq_class cover = 0;
    for (std::size_t t = 0; t < n; ++t) cover += rows[i][t] * sol.tree_weights[t];
    if (cover < 1) throw InternalError("edge not covered by the primal solution");
  }
  mpq_class dual_total = 0;
  for (const mpq_class& y : sol.edge_weights) {
    if (y < 0) throw InternalError("negative dual weight");
    dual_total += y;
  }
  if (dual_total != sol.value) throw InternalError("duality gap in cover LP");
  for (std::size_t t = 0; t < n; ++t) {
    mpq_class load = 0;
    for (std::size_t i = 0; i < e; ++i) load += rows[i][t] * sol.edge_weights[i];
    if (load > 1) throw InternalError("dual constraint violated");
  }
  return sol;
}

mpq_class cover_lp_oracle(const Multigraph& g, std::size_t tree_guard) { return cover_lp_solve(g, tree_guard).value; }

}  // namespace modgraph
