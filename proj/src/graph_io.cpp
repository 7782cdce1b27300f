#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "modgraph/errors.hpp"
#include "modgraph/graph.hpp"
#include "modgraph/graph_io.hpp"

namespace modgraph {

namespace {

using Json = nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

Multigraph build(std::map<long long, int> genus_by_id, const std::vector<std::pair<long long, long long>>& raw,
                 std::size_t line_hint) {
  // Vertex ids need not be dense; they are renumbered in increasing order.
  for (auto [t, h] : raw) {
    genus_by_id.try_emplace(t, 0);
    genus_by_id.try_emplace(h, 0);
  }
  if (genus_by_id.empty()) throw ParseError("graph has no vertices", line_hint);
  std::map<long long, int> dense;
  std::vector<int> genera;
  for (auto [id, g] : genus_by_id) {
    dense[id] = static_cast<int>(genera.size());
    genera.push_back(g);
  }
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [t, h] : raw) edges.push_back({dense[t], dense[h]});
  try {
    return Multigraph(std::move(genera), std::move(edges));
  } catch (const GraphError& err) {
    throw ParseError(err.what(), line_hint);
  }
}

Multigraph parse_json(std::string_view input) {
  Json doc;
  try {
    doc = Json::parse(input);
  } catch (const Json::parse_error& err) {
    throw ParseError(std::string("malformed JSON: ") + err.what(), line_of_offset(input, err.byte));
  }
  if (!doc.is_object()) throw ParseError("graph JSON must be an object", 1);

  std::map<long long, int> genus_by_id;
  bool explicit_vertices = false;
  if (doc.contains("vertices")) {
    explicit_vertices = true;
    const Json& vs = doc["vertices"];
    if (!vs.is_array()) throw ParseError("\"vertices\" must be an array", 0);
    for (const Json& v : vs) {
      if (!v.is_object() || !v.contains("id") || !v["id"].is_number_integer())
        throw ParseError("vertex entries need an integer \"id\"", 0);
      int g = 0;
      if (v.contains("genus")) {
        if (!v["genus"].is_number_integer() || v["genus"].get<long long>() < 0)
          throw ParseError("vertex genus must be a nonnegative integer", 0);
        g = v["genus"].get<int>();
      }
      if (!genus_by_id.emplace(v["id"].get<long long>(), g).second)
        throw ParseError("duplicate vertex id " + v["id"].dump(), 0);
    }
  }

  std::vector<std::pair<long long, long long>> raw;
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("missing \"edges\" array", 0);
  for (const Json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edges must be [tail, head] integer pairs", 0);
    long long t = e[0].get<long long>(), h = e[1].get<long long>();
    if (explicit_vertices && (!genus_by_id.contains(t) || !genus_by_id.contains(h)))
      throw ParseError("edge [" + std::to_string(t) + "," + std::to_string(h) + "] has a dangling endpoint", 0);
    raw.emplace_back(t, h);
  }
  return build(std::move(genus_by_id), raw, 0);
}

Multigraph parse_edge_list(std::string_view input) {
  std::vector<std::pair<long long, long long>> raw;
  std::istringstream in{std::string(input)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long t = 0, h = 0;
    std::string rest;
    if (!(fields >> t)) {
      fields.clear();
      if (fields >> rest) throw ParseError("expected \"tail head\"", lineno);
      continue;  // blank
    }
    if (!(fields >> h) || (fields >> rest)) throw ParseError("expected \"tail head\"", lineno);
    if (t < 0 || h < 0) throw ParseError("negative vertex id", lineno);
    raw.emplace_back(t, h);
  }
  return build({}, raw, 0);
}

}  // namespace

Multigraph parse_graph(std::string_view input) {
  auto first = input.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty input", 0);
  if (input[first] == '{') return parse_json(input);
  return parse_edge_list(input);
}

nlohmann::ordered_json graph_to_json(const Multigraph& g) {
  nlohmann::ordered_json out;
  out["vertices"] = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    nlohmann::ordered_json vj;
    vj["id"] = v;
    vj["genus"] = g.vertex_genus(v);
    out["vertices"].push_back(vj);
  }
  out["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) out["edges"].push_back({e.tail, e.head});
  return out;
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", 0, path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& err) {
    throw ParseError(err.message(), err.line(), path);
  }
}

}  // namespace modgraph
