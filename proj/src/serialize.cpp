#include "tfpack/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tfpack/errors.hpp"

namespace tfpack {

using nlohmann::json;

HostGraph read_edge_list(std::istream& in, const std::string& origin) {
  Vertex n = 0;
  int64_t m = 0;
  if (!(in >> n >> m)) throw Error(Errc::io_error, origin + ": missing 'n m' header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int64_t i = 0; i < m; ++i) {
    Vertex u, v;
    if (!(in >> u >> v))
      throw Error(Errc::io_error, origin + ": truncated at edge " + std::to_string(i + 1) + " of " +
                                      std::to_string(m));
    edges.emplace_back(u, v);
  }
  try {
    return build_graph(n, edges);
  } catch (const Error& e) {
    throw Error(Errc::io_error, origin + ": " + e.what());
  }
}

HostGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const HostGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const HostGraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot open " + path + " for writing");
  write_edge_list(out, g);
}

namespace {

json pattern_to_json(const PatternGraph& pattern) {
  json jp;
  jp["n"] = pattern.full().vertex_count();
  json edges = json::array();
  for (auto [u, v] : pattern.full().edges()) edges.push_back({u, v});
  jp["edges"] = std::move(edges);
  return jp;
}

json witness_body(const SubdivisionWitness& w) {
  json jw;
  jw["branch_map"] = w.branch_map;
  jw["subdiv_paths"] = w.subdiv_paths;
  jw["iso_vertices"] = w.iso_vertices;
  return jw;
}

SubdivisionWitness witness_from(const json& jw) {
  SubdivisionWitness w;
  w.branch_map = jw.at("branch_map").get<std::vector<Vertex>>();
  w.subdiv_paths = jw.at("subdiv_paths").get<std::vector<std::vector<Vertex>>>();
  w.iso_vertices = jw.at("iso_vertices").get<std::vector<Vertex>>();
  return w;
}

}  // namespace

std::string packing_to_json(const HostGraph& g, const PatternGraph& pattern, const Packing& p) {
  json doc;
  doc["format"] = "tfpack-packing-v1";
  doc["host_n"] = g.vertex_count();
  doc["pattern"] = pattern_to_json(pattern);
  json witnesses = json::array();
  for (const auto& w : p.witnesses) witnesses.push_back(witness_body(w));
  doc["witnesses"] = std::move(witnesses);
  doc["covered"] = p.covered.size();
  doc["coverage"] = p.coverage_fraction;
  return doc.dump(2) + "\n";
}

std::string witness_to_json(const PatternGraph& pattern, const SubdivisionWitness& w) {
  json doc;
  doc["format"] = "tfpack-witness-v1";
  doc["pattern"] = pattern_to_json(pattern);
  doc["witness"] = witness_body(w);
  return doc.dump(2) + "\n";
}

LoadedPacking packing_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::io_error, std::string("bad packing JSON: ") + e.what());
  }
  try {
    LoadedPacking out;
    out.host_n = doc.at("host_n").get<Vertex>();
    const auto& jp = doc.at("pattern");
    std::vector<Edge> edges;
    for (const auto& je : jp.at("edges"))
      edges.emplace_back(je.at(0).get<Vertex>(), je.at(1).get<Vertex>());
    out.pattern = PatternGraph(build_graph(jp.at("n").get<Vertex>(), edges));
    for (const auto& jw : doc.at("witnesses")) out.packing.witnesses.push_back(witness_from(jw));
    out.packing.recompute_coverage(out.host_n);
    return out;
  } catch (const json::exception& e) {
    throw Error(Errc::io_error, std::string("bad packing JSON: ") + e.what());
  }
}

}  // namespace tfpack
