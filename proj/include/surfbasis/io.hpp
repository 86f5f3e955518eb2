#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfbasis/basis.hpp"
#include "surfbasis/embedding.hpp"
#include "surfbasis/error.hpp"

namespace surfbasis::io {

using nlohmann::json;

// Embedded-graph file:
//   {"name": str, "vertices": n, "edges": [[u,v],...],
//    "rotation": [[[edge,end],...] per vertex], "signs": [±1,...],
//    optional "chi": int, optional "planar": bool}
// Edge id = position in "edges"; dart end 0 is the u endpoint.
inline EmbeddedGraph parse_embedded_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    const int n = j.at("vertices").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "edge entries must be [u, v]");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    std::vector<std::vector<Dart>> rotation;
    for (const auto& r : j.at("rotation")) {
      auto& out = rotation.emplace_back();
      for (const auto& d : r) {
        if (!d.is_array() || d.size() != 2) throw Error(ErrorKind::ParseError, "darts must be [edge, end]");
        out.push_back({d[0].get<int>(), d[1].get<int>()});
      }
    }
    std::vector<int> signs = j.at("signs").get<std::vector<int>>();
    std::optional<int> chi;
    if (j.contains("chi") && !j["chi"].is_null()) chi = j["chi"].get<int>();
    std::string name = j.value("name", std::string{});
    Multigraph g;
    try {
      g = Multigraph(n, std::move(edges));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    return EmbeddedGraph(std::move(g), std::move(rotation), std::move(signs), std::move(name), chi);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

namespace detail {

template <class T, class F>
void write_list(std::ostream& os, const std::vector<T>& items, F&& each) {
  os << '[';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) os << ',';
    each(items[i]);
  }
  os << ']';
}

}  // namespace detail

// Canonical text form: fixed key order, one rotation per line.
inline std::string serialize_embedded_graph(const EmbeddedGraph& eg, std::optional<bool> planar = std::nullopt) {
  std::ostringstream os;
  const auto& g = eg.graph();
  os << "{\n  \"name\": " << json(eg.name()).dump() << ",\n";
  os << "  \"vertices\": " << g.vertex_count() << ",\n";
  os << "  \"edges\": ";
  detail::write_list(os, g.edges(), [&](const Edge& e) { os << '[' << e.u << ',' << e.v << ']'; });
  os << ",\n  \"rotation\": [";
  for (std::size_t v = 0; v < eg.rotation().size(); ++v) {
    os << (v ? ",\n    " : "\n    ");
    detail::write_list(os, eg.rotation()[v], [&](const Dart& d) { os << '[' << d.edge << ',' << d.end << ']'; });
  }
  os << (eg.rotation().empty() ? "]" : "\n  ]");
  os << ",\n  \"signs\": ";
  detail::write_list(os, eg.signs(), [&](int s) { os << s; });
  if (eg.declared_chi()) os << ",\n  \"chi\": " << *eg.declared_chi();
  if (planar) os << ",\n  \"planar\": " << (*planar ? "true" : "false");
  os << "\n}\n";
  return os.str();
}

// Basis file:
//   {"graph": name, "edge_count": m,
//    "elements": [{"label": str, "edges": [ids...]}, ...]}
struct BasisFile {
  std::string graph;
  int edge_count = 0;
  CycleBasis basis;
};

inline std::string serialize_basis(const std::string& graph_name, int edge_count, const CycleBasis& b) {
  std::ostringstream os;
  os << "{\n  \"graph\": " << json(graph_name).dump() << ",\n  \"edge_count\": " << edge_count
     << ",\n  \"elements\": [";
  for (std::size_t i = 0; i < b.size(); ++i) {
    os << (i ? ",\n    " : "\n    ") << "{\"label\": " << json(b.labels[i].str()).dump() << ", \"edges\": ";
    detail::write_list(os, b.elements[i].ones(), [&](int e) { os << e; });
    os << '}';
  }
  os << (b.size() ? "\n  ]" : "]") << "\n}\n";
  return os.str();
}

inline BasisFile parse_basis(const std::string& text) {
  BasisFile out;
  try {
    json j = json::parse(text);
    out.graph = j.value("graph", std::string{});
    out.edge_count = j.at("edge_count").get<int>();
    if (out.edge_count < 0) throw Error(ErrorKind::ParseError, "negative edge_count");
    for (const auto& el : j.at("elements")) {
      auto ids = el.at("edges").get<std::vector<int>>();
      EdgeVector v(static_cast<std::size_t>(out.edge_count));
      for (int e : ids) {
        if (e < 0 || e >= out.edge_count) throw Error(ErrorKind::ParseError, "edge id out of range in basis element");
        v.flip(static_cast<std::size_t>(e));
      }
      out.basis.push(std::move(v), BasisLabel::parse(el.value("label", std::string("cycle 0"))));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

inline EmbeddedGraph load_embedded_graph(const std::string& path) { return parse_embedded_graph(read_file(path)); }

}  // namespace surfbasis::io
