#include "modgraph/report.hpp"

#include <sstream>

#include "modgraph/graph_io.hpp"

namespace modgraph {

namespace {

using nlohmann::ordered_json;

ordered_json ids(const EdgeSet& s) {
  ordered_json out = ordered_json::array();
  for (EdgeId id : s) out.push_back(id);
  return out;
}

void put_rational(ordered_json& obj, const std::string& key, const mpq_class& q) {
  obj[key] = rational_string(q);
  obj[key + "_float"] = q.get_d();
  obj[key + "_decimal"] = rational_decimal(q);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string rational_string(const mpq_class& q) { return q.get_str(); }

std::string rational_decimal(const mpq_class& q) {
  const mpz_class scale = 1000000;
  const mpz_class num = abs(q.get_num()) * scale * 2 + q.get_den();
  const mpz_class den = q.get_den() * 2;
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpz_class whole, frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), scaled.get_mpz_t(), scale.get_mpz_t());
  std::string digits = frac.get_str();
  digits.insert(0, 6 - digits.size(), '0');
  const bool negative = q < 0 && scaled != 0;
  return (negative ? "-" : "") + whole.get_str() + "." + digits;
}

ordered_json growth_json(const GrowthVerdict& v, double s) {
  ordered_json out;
  out["s"] = s;
  out["method"] = to_string(v.method);
  out["verdict"] = to_string(v.verdict);
  out["decay_ratio"] = v.decay_ratio;
  out["R"] = v.r_grid;
  out["F"] = v.values;
  out["stderr"] = v.stderrs;
  out["increments"] = v.increments;
  out["increment_stderr"] = v.increment_stderrs;
  return out;
}

ordered_json report_to_json(const ConvergenceReport& r, const std::string& source) {
  ordered_json out;
  out["schema"] = kReportSchema;
  out["input"] = source;
  out["status"] = r.has_cycles ? "ok" : "no_cycles";
  out["v"] = r.v;
  out["e"] = r.e;
  out["b"] = r.b;
  out["genus"] = r.genus;
  out["stable"] = r.stable;
  out["graph"] = graph_to_json(r.input);
  out["bridges"] = ids(r.bridges);

  ordered_json psi;
  psi["determinant"] = r.psi_from_determinant.to_string();
  psi["trees"] = r.psi_from_trees.to_string();
  psi["terms"] = r.psi_from_trees.term_count();
  psi["agree"] = r.psi_routes_agree;
  out["psi"] = psi;

  if (!r.has_cycles) {
    out["note"] = "no cycles: the integrand has no Kirchhoff factor and the threshold is undefined";
    return out;
  }

  ordered_json core;
  core["v"] = r.core->vertex_count();
  core["e"] = r.core->edge_count();
  core["b"] = betti(*r.core);
  core["graph"] = graph_to_json(*r.core);
  out["core"] = core;

  put_rational(out, "c", r.c);

  ordered_json cert;
  cert["m"] = rational_string(r.certificate.m);
  cert["t0"] = ids(r.certificate.t0);
  ordered_json witness = ordered_json::array();
  for (const mpq_class& w : r.certificate.witness) witness.push_back(rational_string(w));
  cert["witness"] = witness;
  out["certificate"] = cert;

  ordered_json bound;
  put_rational(bound, "e_over_b", r.core_ratio);
  bound["optimal"] = r.core_optimal;
  out["lower_bound"] = bound;

  ordered_json contraction;
  contraction["verified"] = r.contraction_verified;
  if (r.contraction_verified) {
    const Multigraph& bar = r.contraction.graph;
    contraction["contracted"] = ids(r.contraction.contracted);
    contraction["v"] = bar.vertex_count();
    contraction["e"] = bar.edge_count();
    contraction["b"] = betti(bar);
    contraction["c"] = rational_string(r.contraction.c);
    contraction["graph"] = graph_to_json(bar);
  } else {
    contraction["error"] = r.contraction_error;
  }
  out["optimal_contraction"] = contraction;

  ordered_json statement;
  statement["converges_for"] = "Re(s) > " + rational_string(r.c);
  statement["diverges_at"] = rational_string(r.c);
  out["convergence"] = statement;

  if (!r.probes.empty() || !r.probe_note.empty()) {
    ordered_json probe;
    probe["note"] = r.probe_note.empty()
                        ? "real s only; Re(s) governs convergence; cutoff normalised to y >= 1; bridges contracted"
                        : r.probe_note;
    ordered_json runs = ordered_json::array();
    for (const ProbeSummary& p : r.probes) runs.push_back(growth_json(p.verdict, p.s));
    probe["runs"] = runs;
    out["probe"] = probe;
  }
  return out;
}

std::string report_csv_header() { return "input,v,e,b,genus,stable,bridges,c,c_float,e_over_b,optimal,contracted_e,contracted_b,psi_agree"; }

std::string report_csv_row(const ConvergenceReport& r, const std::string& source) {
  std::ostringstream row;
  row << csv_field(source) << ',' << r.v << ',' << r.e << ',' << r.b << ',' << r.genus << ','
      << (r.stable ? "true" : "false") << ',' << r.bridges.size() << ',';
  if (r.has_cycles) {
    row << rational_string(r.c) << ',' << rational_decimal(r.c) << ',' << rational_string(r.core_ratio) << ','
        << (r.core_optimal ? "true" : "false") << ',';
    if (r.contraction_verified)
      row << r.contraction.graph.edge_count() << ',' << betti(r.contraction.graph);
    else
      row << ',';
  } else {
    row << ",,,,,";
  }
  row << ',' << (r.psi_routes_agree ? "true" : "false");
  return row.str();
}

std::string probe_csv(const ConvergenceReport& r, const std::string& source) {
  std::ostringstream out;
  out << "input,s,R,F,stderr\n";
  out.precision(17);
  for (const ProbeSummary& p : r.probes)
    for (std::size_t k = 0; k < p.verdict.r_grid.size(); ++k)
      out << csv_field(source) << ',' << p.s << ',' << p.verdict.r_grid[k] << ',' << p.verdict.values[k] << ','
          << p.verdict.stderrs[k] << '\n';
  return out.str();
}

ordered_json search_hit_json(const SearchHit& hit) {
  ordered_json out;
  out["schema"] = kReportSchema;
  put_rational(out, "c", hit.c);
  out["v"] = hit.graph.vertex_count();
  out["e"] = hit.graph.edge_count();
  out["b"] = betti(hit.graph);
  out["graph"] = graph_to_json(hit.graph);
  return out;
}

}  // namespace modgraph
