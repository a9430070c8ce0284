#include <sstream>

#include <json.hpp>

#include "glmn/error.hpp"
#include "glmn/lattice.hpp"

namespace glmn {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

} // namespace

std::string to_dot(const ColoredGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << dot_escape(name) << "\" {\n";
  out << "  label=\"" << to_string(g.rank()) << "\";\n";
  out << "  node [shape=box];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::string label = to_string(g.representative(v));
    if (const auto size = g.vertex_class(v).size(); size > 1) label += " {" + std::to_string(size) + "}";
    out << "  v" << v << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (const auto& e : g.edges())
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << to_string(e.color) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const ColoredGraph& g) {
  nlohmann::ordered_json doc;
  doc["rank"] = {g.rank().m, g.rank().n};
  auto vertices = nlohmann::ordered_json::array();
  for (const auto& cls : g.classes()) {
    auto members = nlohmann::ordered_json::array();
    for (const auto& p : cls)
      members.push_back(p.rows());
    vertices.push_back(std::move(members));
  }
  doc["vertices"] = std::move(vertices);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"u", e.u}, {"v", e.v}, {"color", {e.color.i, e.color.j}}});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

ColoredGraph graph_from_json(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto& rank_json = doc.at("rank");
    if (!rank_json.is_array() || rank_json.size() != 2) throw UsageError("\"rank\" must be [m, n]");
    const Rank rank(rank_json[0].get<int>(), rank_json[1].get<int>());

    std::vector<std::vector<Partition>> classes;
    for (const auto& cls : doc.at("vertices")) {
      std::vector<Partition> members;
      for (const auto& p : cls)
        members.emplace_back(rank, p.get<std::vector<int>>());
      classes.push_back(std::move(members));
    }
    std::vector<ColoredEdge> edges;
    for (const auto& e : doc.at("edges")) {
      const auto& c = e.at("color");
      if (!c.is_array() || c.size() != 2) throw UsageError("edge \"color\" must be [i, j]");
      edges.push_back(
          ColoredEdge{e.at("u").get<VertexId>(), e.at("v").get<VertexId>(), Box{c[0].get<int>(), c[1].get<int>()}});
    }
    return ColoredGraph(rank, std::move(classes), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw UsageError(std::string("malformed graph JSON: ") + ex.what());
  }
}

} // namespace glmn
