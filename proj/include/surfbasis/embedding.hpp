#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "surfbasis/edge_vector.hpp"
#include "surfbasis/error.hpp"
#include "surfbasis/graph.hpp"

namespace surfbasis {

// One end of an edge. end 0 sits at edge.u, end 1 at edge.v.
struct Dart {
  EdgeId edge = 0;
  int end = 0;

  int id() const { return 2 * edge + end; }
  Dart opposite() const { return {edge, 1 - end}; }
  bool operator==(const Dart&) const = default;
  auto operator<=>(const Dart&) const = default;
};

inline VertexId dart_vertex(const Multigraph& g, Dart d) {
  const auto& e = g.edge(d.edge);
  return d.end == 0 ? e.u : e.v;
}

// A cellular embedding given by a rotation system (cyclic dart order per
// vertex) and an edge signature. Construction does not validate; see
// validate() and require_valid().
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  EmbeddedGraph(Multigraph g, std::vector<std::vector<Dart>> rotation, std::vector<int> signs,
                std::string name = {}, std::optional<int> declared_chi = std::nullopt)
      : graph_(std::move(g)),
        rotation_(std::move(rotation)),
        signs_(std::move(signs)),
        name_(std::move(name)),
        declared_chi_(declared_chi) {}

  // All-positive signature.
  static EmbeddedGraph orientable(Multigraph g, std::vector<std::vector<Dart>> rotation, std::string name = {}) {
    std::vector<int> signs(static_cast<std::size_t>(g.edge_count()), 1);
    return EmbeddedGraph(std::move(g), std::move(rotation), std::move(signs), std::move(name));
  }

  const Multigraph& graph() const noexcept { return graph_; }
  const std::vector<std::vector<Dart>>& rotation() const noexcept { return rotation_; }
  const std::vector<Dart>& rotation(VertexId v) const { return rotation_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  int sign(EdgeId e) const { return signs_[static_cast<std::size_t>(e)]; }
  const std::string& name() const noexcept { return name_; }
  const std::optional<int>& declared_chi() const noexcept { return declared_chi_; }

  void set_name(std::string name) { name_ = std::move(name); }
  void set_declared_chi(std::optional<int> chi) { declared_chi_ = chi; }

  // Reverse the rotation at v and negate the signs of its incident edges.
  // Yields an equivalent embedding of the same surface.
  void flip_vertex(VertexId v) {
    auto& r = rotation_[static_cast<std::size_t>(v)];
    std::reverse(r.begin(), r.end());
    for (EdgeId e : graph_.incident(v)) signs_[static_cast<std::size_t>(e)] *= -1;
  }

  bool operator==(const EmbeddedGraph& o) const {
    return graph_ == o.graph_ && rotation_ == o.rotation_ && signs_ == o.signs_ && name_ == o.name_ &&
           declared_chi_ == o.declared_chi_;
  }

 private:
  Multigraph graph_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<int> signs_;
  std::string name_;
  std::optional<int> declared_chi_;
};

// Lists every structural problem; an empty result means the embedding is a
// valid connected rotation system.
inline std::vector<std::string> validate_structure(const EmbeddedGraph& eg) {
  std::vector<std::string> out;
  const auto& g = eg.graph();
  const int m = g.edge_count();
  if (static_cast<int>(eg.rotation().size()) != g.vertex_count())
    out.push_back("rotation count " + std::to_string(eg.rotation().size()) + " != vertex count " +
                  std::to_string(g.vertex_count()));
  if (static_cast<int>(eg.signs().size()) != m)
    out.push_back("sign count " + std::to_string(eg.signs().size()) + " != edge count " + std::to_string(m));
  for (std::size_t e = 0; e < eg.signs().size(); ++e)
    if (eg.signs()[e] != 1 && eg.signs()[e] != -1)
      out.push_back("sign of edge " + std::to_string(e) + " is not +1 or -1");

  std::vector<int> seen(static_cast<std::size_t>(2 * m), 0);
  const auto vertices = std::min<std::size_t>(eg.rotation().size(), static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t v = 0; v < eg.rotation().size(); ++v) {
    for (const Dart& d : eg.rotation()[v]) {
      std::string tag = "dart (" + std::to_string(d.edge) + "," + std::to_string(d.end) + ")";
      if (d.edge < 0 || d.edge >= m || (d.end != 0 && d.end != 1)) {
        out.push_back(tag + " invalid at vertex " + std::to_string(v));
        continue;
      }
      if (++seen[static_cast<std::size_t>(d.id())] > 1) out.push_back(tag + " duplicated");
      if (v < vertices && dart_vertex(g, d) != static_cast<VertexId>(v))
        out.push_back(tag + " misplaced: listed at vertex " + std::to_string(v) + ", belongs to vertex " +
                      std::to_string(dart_vertex(g, d)));
    }
  }
  for (int e = 0; e < m; ++e)
    for (int end = 0; end < 2; ++end)
      if (seen[static_cast<std::size_t>(2 * e + end)] == 0)
        out.push_back("dart (" + std::to_string(e) + "," + std::to_string(end) + ") absent");
  if (!g.is_connected()) out.push_back("graph is not connected");
  return out;
}

inline void require_valid(const EmbeddedGraph& eg) {
  auto problems = validate_structure(eg);
  if (problems.empty()) return;
  std::string msg;
  for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
  bool disconnected_only = problems.size() == 1 && problems[0] == "graph is not connected";
  throw Error(disconnected_only ? ErrorKind::DisconnectedGraph : ErrorKind::InvalidEmbedding, msg);
}

// dart id -> (vertex, index in that vertex's rotation)
inline std::vector<std::pair<VertexId, int>> dart_positions(const EmbeddedGraph& eg) {
  std::vector<std::pair<VertexId, int>> pos(static_cast<std::size_t>(2 * eg.graph().edge_count()), {-1, -1});
  for (std::size_t v = 0; v < eg.rotation().size(); ++v)
    for (std::size_t i = 0; i < eg.rotation()[v].size(); ++i)
      pos[static_cast<std::size_t>(eg.rotation()[v][i].id())] = {static_cast<VertexId>(v), static_cast<int>(i)};
  return pos;
}

// One step of a face walk: leave the current vertex along `dart`, with the
// local orientation `orientation` (+1 follows rotation successors).
struct FaceStep {
  Dart dart;
  int orientation = 1;
  bool operator==(const FaceStep&) const = default;
};

struct Face {
  std::vector<FaceStep> walk;
  EdgeVector boundary;  // edges traversed exactly once
};

// Corner j of vertex v lies between rotation(v)[j] and rotation(v)[j+1].
struct Corner {
  VertexId vertex = 0;
  int index = 0;
  bool operator==(const Corner&) const = default;
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<std::vector<int>> corner_face;  // [vertex][corner] -> face index

  std::size_t size() const noexcept { return faces.size(); }

  std::size_t total_walk_length() const {
    std::size_t n = 0;
    for (const auto& f : faces) n += f.walk.size();
    return n;
  }
};

namespace detail {

struct WalkState {
  Dart dart;
  int orientation;
};

inline int state_index(Dart d, int orientation) { return 2 * d.id() + (orientation > 0 ? 0 : 1); }

}  // namespace detail

// Face tracing for signed rotation systems. The 4|E| (dart, orientation)
// states split into orbits; every face is two mutually reversed orbits and
// only the first one met (scanning darts in id order, + before -) is kept.
inline FaceSet trace_faces(const EmbeddedGraph& eg) {
  require_valid(eg);
  const auto& g = eg.graph();
  const int m = g.edge_count();
  FaceSet fs;
  fs.corner_face.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) fs.corner_face[v].assign(eg.rotation(v).size(), -1);
  if (m == 0) {
    // A lone vertex on the sphere: one face with an empty walk.
    fs.faces.push_back({{}, g.empty_vector()});
    return fs;
  }
  const auto pos = dart_positions(eg);
  std::vector<char> used(static_cast<std::size_t>(4 * m), 0);

  auto next_state = [&](Dart leave, int orientation) {
    Dart arrive = leave.opposite();
    int o = orientation * eg.sign(leave.edge);
    auto [w, i] = pos[static_cast<std::size_t>(arrive.id())];
    const auto& rot = eg.rotation(w);
    const int deg = static_cast<int>(rot.size());
    Dart out = o > 0 ? rot[static_cast<std::size_t>((i + 1) % deg)] : rot[static_cast<std::size_t>((i + deg - 1) % deg)];
    return detail::WalkState{out, o};
  };

  for (int id = 0; id < 2 * m; ++id) {
    Dart d0{id / 2, id % 2};
    for (int o0 : {1, -1}) {
      if (used[static_cast<std::size_t>(detail::state_index(d0, o0))]) continue;
      Face face;
      face.boundary = g.empty_vector();
      Dart d = d0;
      int o = o0;
      do {
        used[static_cast<std::size_t>(detail::state_index(d, o))] = 1;
        face.walk.push_back({d, o});
        auto nx = next_state(d, o);
        d = nx.dart;
        o = nx.orientation;
      } while (!(d == d0 && o == o0));
      for (const auto& st : face.walk) {
        Dart rd = st.dart.opposite();
        int ro = -st.orientation * eg.sign(st.dart.edge);
        used[static_cast<std::size_t>(detail::state_index(rd, ro))] = 1;
        face.boundary.flip(static_cast<std::size_t>(st.dart.edge));
      }
      const int fi = static_cast<int>(fs.faces.size());
      for (std::size_t s = 0; s < face.walk.size(); ++s) {
        const auto& st = face.walk[s];
        auto [v, i] = pos[static_cast<std::size_t>(st.dart.id())];
        const int deg = static_cast<int>(eg.rotation(v).size());
        int corner = st.orientation > 0 ? (i + deg - 1) % deg : i;
        fs.corner_face[v][corner] = fi;
      }
      fs.faces.push_back(std::move(face));
    }
  }
  return fs;
}

inline int euler_characteristic(const EmbeddedGraph& eg, const FaceSet& fs) {
  return eg.graph().vertex_count() - eg.graph().edge_count() + static_cast<int>(fs.size());
}

inline int euler_characteristic(const EmbeddedGraph& eg) { return euler_characteristic(eg, trace_faces(eg)); }

// Per-vertex flips (+1/-1) along a BFS tree that make every tree edge
// positive. The embedding is orientable iff this also clears every chord.
inline std::vector<int> orientation_flips(const EmbeddedGraph& eg) {
  const auto& g = eg.graph();
  auto t = spanning_tree(g);
  std::vector<int> flip(static_cast<std::size_t>(g.vertex_count()), 1);
  std::vector<VertexId> order(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return t.depth[a] < t.depth[b]; });
  for (VertexId v : order)
    if (t.parent[v] >= 0) flip[v] = flip[t.parent[v]] * eg.sign(t.parent_edge[v]);
  return flip;
}

inline bool is_orientable(const EmbeddedGraph& eg) {
  require_valid(eg);
  const auto& g = eg.graph();
  auto flip = orientation_flips(eg);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (flip[g.edge(e).u] * flip[g.edge(e).v] * eg.sign(e) < 0) return false;
  return true;
}

struct Surface {
  bool orientable = true;
  int genus = 0;
  int chi = 2;

  std::string describe() const {
    return std::string(orientable ? "orientable" : "non-orientable") + " genus " + std::to_string(genus);
  }
  bool operator==(const Surface&) const = default;
};

inline Surface surface_of(bool orientable, int chi) {
  if (orientable) {
    if ((2 - chi) % 2 != 0 || chi > 2)
      throw Error(ErrorKind::InvalidParity, "orientable embedding with chi = " + std::to_string(chi));
    return {true, (2 - chi) / 2, chi};
  }
  if (chi > 1) throw Error(ErrorKind::InvalidParity, "non-orientable embedding with chi = " + std::to_string(chi));
  return {false, 2 - chi, chi};
}

inline Surface surface_name(const EmbeddedGraph& eg) {
  return surface_of(is_orientable(eg), euler_characteristic(eg));
}

// Structural problems plus a mismatch against the declared Euler
// characteristic, when one is declared.
inline std::vector<std::string> validate(const EmbeddedGraph& eg) {
  auto out = validate_structure(eg);
  if (!out.empty() || !eg.declared_chi()) return out;
  int chi = euler_characteristic(eg);
  if (chi != *eg.declared_chi())
    out.push_back("declared chi " + std::to_string(*eg.declared_chi()) + " but traced chi " + std::to_string(chi));
  return out;
}

// Embedding of the subgraph on `edges`, keeping the cyclic order of the
// surviving darts. Vertices without surviving edges are dropped; the maps
// translate sub ids back to the parent.
struct SubEmbedding {
  EmbeddedGraph embedding;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

inline SubEmbedding induced_subembedding(const EmbeddedGraph& eg, const EdgeVector& edges) {
  const auto& g = eg.graph();
  SubEmbedding sub;
  std::vector<int> vid(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> eid(static_cast<std::size_t>(g.edge_count()), -1);
  std::vector<Edge> sub_edges;
  std::vector<int> signs;
  for (EdgeId e : edges.ones()) {
    for (VertexId w : {g.edge(e).u, g.edge(e).v}) {
      if (vid[w] < 0) {
        vid[w] = static_cast<int>(sub.vertex_map.size());
        sub.vertex_map.push_back(w);
      }
    }
  }
  // Renumber vertices in increasing parent id for determinism.
  std::sort(sub.vertex_map.begin(), sub.vertex_map.end());
  for (std::size_t i = 0; i < sub.vertex_map.size(); ++i) vid[sub.vertex_map[i]] = static_cast<int>(i);
  for (EdgeId e : edges.ones()) {
    eid[e] = static_cast<int>(sub.edge_map.size());
    sub.edge_map.push_back(e);
    sub_edges.push_back({vid[g.edge(e).u], vid[g.edge(e).v]});
    signs.push_back(eg.sign(e));
  }
  std::vector<std::vector<Dart>> rot(sub.vertex_map.size());
  for (std::size_t i = 0; i < sub.vertex_map.size(); ++i)
    for (const Dart& d : eg.rotation(sub.vertex_map[i]))
      if (eid[d.edge] >= 0) rot[i].push_back({eid[d.edge], d.end});
  sub.embedding = EmbeddedGraph(Multigraph(static_cast<int>(sub.vertex_map.size()), std::move(sub_edges)),
                                std::move(rot), std::move(signs));
  return sub;
}

}  // namespace surfbasis
