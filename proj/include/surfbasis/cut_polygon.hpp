#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfbasis/edge_vector.hpp"
#include "surfbasis/embedding.hpp"
#include "surfbasis/error.hpp"
#include "surfbasis/graph.hpp"

namespace surfbasis {

// Index of a theta path by the cycles it belongs to.
enum PathRole : int { kOnlyX = 0, kOnlyY = 1, kShared = 2 };

inline const char* path_role_name(int role) {
  switch (role) {
    case kOnlyX: return "x";
    case kOnlyY: return "y";
    default: return "xy";
  }
}

struct ThetaPath {
  std::vector<VertexId> vertices;  // from branch vertex a to branch vertex b
  std::vector<EdgeId> edges;
  EdgeVector edge_set;
};

// Two branch vertices joined by three internally disjoint paths, indexed by
// PathRole: x\y, y\x and x∩y.
struct Theta {
  VertexId a = -1;
  VertexId b = -1;
  std::array<ThetaPath, 3> paths;
  EdgeVector edges;
  int vertex_count = 0;
  int edge_count = 0;

  int role_of_edge(EdgeId e) const {
    for (int r = 0; r < 3; ++r)
      if (paths[r].edge_set.test(static_cast<std::size_t>(e))) return r;
    return -1;
  }
};

inline Theta decompose_theta(const Multigraph& g, const EdgeVector& x, const EdgeVector& y) {
  Theta th;
  th.edges = x | y;
  const auto edges = th.edges.ones();
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  std::vector<VertexId> branch;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] == 0) continue;
    ++th.vertex_count;
    if (deg[v] == 3) branch.push_back(v);
    else if (deg[v] != 2) throw Error(ErrorKind::NotTheta, "vertex " + std::to_string(v) + " has degree " +
                                                               std::to_string(deg[v]) + " in x ∪ y");
  }
  th.edge_count = static_cast<int>(edges.size());
  if (branch.size() != 2) throw Error(ErrorKind::NotTheta, "x ∪ y does not have exactly two branch vertices");
  th.a = branch[0];
  th.b = branch[1];

  const EdgeVector shared = x & y;
  std::array<bool, 3> filled{false, false, false};
  for (EdgeId first : g.incident(th.a)) {
    if (!th.edges.test(static_cast<std::size_t>(first))) continue;
    ThetaPath p;
    p.edge_set = g.empty_vector();
    VertexId cur = th.a;
    EdgeId e = first;
    p.vertices.push_back(cur);
    while (true) {
      p.edges.push_back(e);
      p.edge_set.set(static_cast<std::size_t>(e));
      cur = g.edge(e).other(cur);
      p.vertices.push_back(cur);
      if (cur == th.a || cur == th.b) break;
      EdgeId next = -1;
      for (EdgeId f : g.incident(cur))
        if (f != e && th.edges.test(static_cast<std::size_t>(f))) next = f;
      e = next;
    }
    if (cur != th.b) throw Error(ErrorKind::NotTheta, "a path from a branch vertex returns to itself");
    int role;
    if (p.edge_set.is_subset_of(shared)) role = kShared;
    else if (p.edge_set.is_subset_of(x - y)) role = kOnlyX;
    else if (p.edge_set.is_subset_of(y - x)) role = kOnlyY;
    else throw Error(ErrorKind::NotTheta, "a branch path mixes edges of x only, y only and x ∩ y");
    if (filled[role]) throw Error(ErrorKind::NotTheta, "two branch paths play the same role");
    filled[role] = true;
    th.paths[role] = std::move(p);
  }
  if (!(filled[0] && filled[1] && filled[2])) throw Error(ErrorKind::NotTheta, "x ∪ y is not a theta graph");
  // Paths must be internally disjoint: interior vertex counts add up.
  int interior = 0;
  for (const auto& p : th.paths) interior += static_cast<int>(p.vertices.size()) - 2;
  if (interior + 2 != th.vertex_count) throw Error(ErrorKind::NotTheta, "branch paths share interior vertices");
  return th;
}

struct PolygonSide {
  int path = 0;         // PathRole of the theta path it projects to
  bool primed = false;  // second copy met along the boundary walk
  int begin = 0;        // index into boundary_walk
  int length = 0;
  std::vector<VertexId> vertices;  // disk vertices, length + 1 of them
  std::vector<EdgeId> edges;       // disk edges

  std::string label() const { return std::string("p_") + path_role_name(path) + (primed ? "'" : ""); }
};

// The disk obtained by cutting a χ = 0 surface along a one-faced theta
// subgraph H, with correspondences back to the original embedding.
struct CutPolygon {
  EmbeddedGraph disk;  // planar, all signs positive
  FaceSet disk_faces;
  int outer_face = -1;
  std::vector<EdgeId> edge_map;    // disk edge -> original edge
  std::vector<VertexId> vertex_map;  // disk vertex -> original vertex
  std::vector<int> face_map;       // disk face -> original face, -1 for the outer face
  std::vector<Dart> boundary_walk;   // outer face, starting at a branch copy
  std::vector<VertexId> boundary_vertices;  // tail of each boundary dart
  std::array<PolygonSide, 6> sides;
  std::vector<std::vector<int>> vertex_sides;  // disk vertex -> sides containing it
  std::vector<std::array<int, 2>> edge_faces;  // disk edge -> faces on its two sides
  Theta theta;

  int h_v() const { return theta.vertex_count; }
  int h_e() const { return theta.edge_count; }
  int interior_face_count() const { return static_cast<int>(disk_faces.size()) - 1; }

  // Sides i and j are consecutive on the hexagon.
  static bool consecutive(int i, int j) {
    int d = (i - j + 6) % 6;
    return d == 1 || d == 5;
  }

  // Disk vertices visited by a face walk, in order.
  std::vector<VertexId> face_vertices(int face) const {
    std::vector<VertexId> out;
    for (const auto& st : disk_faces.faces[static_cast<std::size_t>(face)].walk)
      out.push_back(dart_vertex(disk.graph(), st.dart));
    return out;
  }
};

namespace detail {

inline EdgeVector project_to_original(const CutPolygon& cut, const EdgeVector& disk_vector, std::size_t universe) {
  EdgeVector out(universe);
  for (EdgeId e : disk_vector.ones()) out.flip(static_cast<std::size_t>(cut.edge_map[e]));
  return out;
}

}  // namespace detail

// Cuts along x ∪ y. `faces` must be trace_faces(eg).
inline CutPolygon cut_along_theta(const EmbeddedGraph& eg, const FaceSet& faces, const EdgeVector& x,
                                  const EdgeVector& y) {
  require_valid(eg);
  const auto& g = eg.graph();
  const int chi = euler_characteristic(eg, faces);
  if (chi != 0) throw Error(ErrorKind::WrongChi, "cutting along a theta needs chi = 0, got " + std::to_string(chi));

  CutPolygon cut;
  cut.theta = decompose_theta(g, x, y);
  const Theta& th = cut.theta;

  {
    auto sub = induced_subembedding(eg, th.edges);
    auto hf = trace_faces(sub.embedding);
    if (hf.size() != 1)
      throw Error(ErrorKind::SeparatingCycle, "the embedding induced on x ∪ y has " + std::to_string(hf.size()) +
                                                  " faces; one of x, y, x+y is separating");
  }

  const int n = g.vertex_count();
  const int m = g.edge_count();
  auto in_h = [&](EdgeId e) { return th.edges.test(static_cast<std::size_t>(e)); };

  // Disk edge ids: every original edge keeps its id (first copy for H
  // edges); second copies of H edges follow in increasing original id.
  std::vector<EdgeId> second_copy(static_cast<std::size_t>(m), -1);
  cut.edge_map.resize(static_cast<std::size_t>(m));
  for (EdgeId e = 0; e < m; ++e) cut.edge_map[e] = e;
  for (EdgeId e : th.edges.ones()) {
    second_copy[e] = static_cast<EdgeId>(cut.edge_map.size());
    cut.edge_map.push_back(e);
  }
  const int disk_m = static_cast<int>(cut.edge_map.size());

  // Which copy of an H edge an H dart uses, on the side that follows it in
  // the rotation (after) or precedes it (before). Copies pair up so that
  // face tracing in the disk reproduces every original corner.
  auto disk_dart = [&](Dart d, bool after) -> Dart {
    const EdgeId c0 = d.edge, c1 = second_copy[d.edge];
    if (d.end == 0) return after ? Dart{c0, 0} : Dart{c1, 0};
    if (eg.sign(d.edge) > 0) return after ? Dart{c1, 1} : Dart{c0, 1};
    return after ? Dart{c0, 1} : Dart{c1, 1};
  };

  std::vector<std::vector<Dart>> rotation;
  std::vector<std::vector<Corner>> corner_origin;  // index -1 marks the outer corner
  cut.vertex_map.clear();
  rotation.resize(static_cast<std::size_t>(n));
  corner_origin.resize(static_cast<std::size_t>(n));
  cut.vertex_map.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) cut.vertex_map[v] = v;

  for (VertexId v = 0; v < n; ++v) {
    const auto& rot = eg.rotation(v);
    const int deg = static_cast<int>(rot.size());
    std::vector<int> hpos;
    for (int i = 0; i < deg; ++i)
      if (in_h(rot[i].edge)) hpos.push_back(i);
    if (hpos.empty()) {
      rotation[v] = rot;
      for (int i = 0; i < deg; ++i) corner_origin[v].push_back({v, i});
      continue;
    }
    const int k = static_cast<int>(hpos.size());
    for (int c = 0; c < k; ++c) {
      const int start = hpos[c];
      const int stop = c + 1 < k ? hpos[c + 1] : hpos[0] + deg;
      VertexId copy = v;
      if (c > 0) {
        copy = static_cast<VertexId>(cut.vertex_map.size());
        cut.vertex_map.push_back(v);
        rotation.emplace_back();
        corner_origin.emplace_back();
      }
      auto& r = rotation[copy];
      auto& co = corner_origin[copy];
      r.push_back(disk_dart(rot[start], true));
      for (int i = start + 1; i < stop; ++i) r.push_back(rot[i % deg]);
      r.push_back(disk_dart(rot[stop % deg], false));
      for (int j = 0; j + 1 < static_cast<int>(r.size()); ++j) co.push_back({v, (start + j) % deg});
      co.push_back({v, -1});
    }
  }

  const int disk_n = static_cast<int>(rotation.size());
  std::vector<std::array<VertexId, 2>> ends(static_cast<std::size_t>(disk_m), {-1, -1});
  for (VertexId v = 0; v < disk_n; ++v)
    for (const Dart& d : rotation[v]) ends[d.edge][d.end] = v;
  std::vector<Edge> disk_edges;
  std::vector<int> disk_signs;
  for (EdgeId e = 0; e < disk_m; ++e) {
    disk_edges.push_back({ends[e][0], ends[e][1]});
    disk_signs.push_back(eg.sign(cut.edge_map[e]));
  }
  cut.disk = EmbeddedGraph(Multigraph(disk_n, std::move(disk_edges)), std::move(rotation), std::move(disk_signs),
                           eg.name().empty() ? std::string("disk") : eg.name() + "_disk");

  // Normalise to an all-positive signature. A disk is orientable, so the
  // tree flips must clear every edge.
  require_valid(cut.disk);
  const auto flips = orientation_flips(cut.disk);
  for (VertexId v = 0; v < disk_n; ++v) {
    if (flips[v] > 0) continue;
    cut.disk.flip_vertex(v);
    auto& co = corner_origin[v];
    const int deg = static_cast<int>(co.size());
    std::vector<Corner> re(co.size());
    for (int i = 0; i < deg; ++i) re[i] = co[static_cast<std::size_t>(((deg - 2 - i) % deg + deg) % deg)];
    co = std::move(re);
  }
  for (EdgeId e = 0; e < disk_m; ++e)
    if (cut.disk.sign(e) < 0)
      throw Error(ErrorKind::TheoremViolation, "cut surface is not orientable; the cut is not a disk");

  cut.disk_faces = trace_faces(cut.disk);
  const auto& df = cut.disk_faces;
  cut.face_map.assign(df.size(), -2);
  for (VertexId v = 0; v < disk_n; ++v) {
    for (std::size_t j = 0; j < corner_origin[v].size(); ++j) {
      const Corner& c = corner_origin[v][j];
      const int target = c.index < 0 ? -1 : faces.corner_face[c.vertex][c.index];
      int& slot = cut.face_map[df.corner_face[v][j]];
      if (slot == -2) slot = target;
      else if (slot != target)
        throw Error(ErrorKind::TheoremViolation, "a disk face mixes corners of different original faces");
    }
  }
  for (int f = 0; f < static_cast<int>(df.size()); ++f) {
    if (cut.face_map[f] == -1) {
      if (cut.outer_face >= 0) throw Error(ErrorKind::TheoremViolation, "the cut has more than one outer face");
      cut.outer_face = f;
    }
  }
  if (cut.outer_face < 0) throw Error(ErrorKind::TheoremViolation, "the cut has no outer face");

  // Boundary walk, rotated to begin at a copy of a branch vertex.
  const auto& outer = df.faces[static_cast<std::size_t>(cut.outer_face)].walk;
  const int L = static_cast<int>(outer.size());
  auto is_branch_copy = [&](VertexId dv) {
    VertexId ov = cut.vertex_map[dv];
    return ov == th.a || ov == th.b;
  };
  int shift = -1;
  for (int i = 0; i < L && shift < 0; ++i)
    if (is_branch_copy(dart_vertex(cut.disk.graph(), outer[i].dart))) shift = i;
  if (shift < 0) throw Error(ErrorKind::TheoremViolation, "boundary walk misses the branch vertices");
  for (int i = 0; i < L; ++i) {
    Dart d = outer[(i + shift) % L].dart;
    cut.boundary_walk.push_back(d);
    cut.boundary_vertices.push_back(dart_vertex(cut.disk.graph(), d));
  }

  std::vector<int> starts;
  for (int i = 0; i < L; ++i)
    if (is_branch_copy(cut.boundary_vertices[i])) starts.push_back(i);
  if (starts.size() != 6)
    throw Error(ErrorKind::TheoremViolation,
                "boundary has " + std::to_string(starts.size()) + " branch corners instead of 6");
  std::array<int, 3> seen_role{0, 0, 0};
  cut.vertex_sides.assign(static_cast<std::size_t>(disk_n), {});
  for (int s = 0; s < 6; ++s) {
    PolygonSide& side = cut.sides[s];
    side.begin = starts[s];
    side.length = (s + 1 < 6 ? starts[s + 1] : L) - starts[s];
    side.path = -1;
    for (int i = 0; i < side.length; ++i) {
      const Dart d = cut.boundary_walk[side.begin + i];
      side.edges.push_back(d.edge);
      side.vertices.push_back(cut.boundary_vertices[side.begin + i]);
      const int role = th.role_of_edge(cut.edge_map[d.edge]);
      if (side.path < 0) side.path = role;
      else if (side.path != role)
        throw Error(ErrorKind::TheoremViolation, "a polygon side mixes edges of different theta paths");
    }
    side.vertices.push_back(cut.boundary_vertices[(side.begin + side.length) % L]);
    if (side.path < 0) throw Error(ErrorKind::TheoremViolation, "empty polygon side");
    side.primed = seen_role[side.path]++ > 0;
    for (VertexId v : side.vertices) cut.vertex_sides[v].push_back(s);
  }

  cut.edge_faces.assign(static_cast<std::size_t>(disk_m), {-1, -1});
  for (int f = 0; f < static_cast<int>(df.size()); ++f)
    for (const auto& st : df.faces[f].walk) {
      auto& slot = cut.edge_faces[st.dart.edge];
      (slot[0] < 0 ? slot[0] : slot[1]) = f;
    }
  return cut;
}

inline CutPolygon cut_along_theta(const EmbeddedGraph& eg, const EdgeVector& x, const EdgeVector& y) {
  return cut_along_theta(eg, trace_faces(eg), x, y);
}

// Checks every structural property the cut must have; returns the
// violations found (empty when the cut is sound).
inline std::vector<std::string> check_cut_invariants(const EmbeddedGraph& eg, const FaceSet& faces,
                                                     const CutPolygon& cut) {
  std::vector<std::string> out;
  const auto& g = eg.graph();
  const auto& dg = cut.disk.graph();
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };
  expect(dg.vertex_count() == g.vertex_count() + cut.h_v() + 2, "|V'| != |V| + h_v + 2");
  expect(dg.edge_count() == g.edge_count() + cut.h_e(), "|E'| != |E| + h_e");
  expect(cut.interior_face_count() == static_cast<int>(faces.size()), "interior faces != |F|");
  expect(euler_characteristic(cut.disk, cut.disk_faces) == 2, "chi(disk) != 2");
  expect(static_cast<int>(cut.boundary_walk.size()) == 2 * cut.h_e(), "boundary length != 2 h_e");
  for (int s = 0; s < 6; ++s)
    expect(cut.sides[s].path != cut.sides[(s + 1) % 6].path,
           "sides " + cut.sides[s].label() + " and " + cut.sides[(s + 1) % 6].label() + " are adjacent copies");
  for (int r = 0; r < 3; ++r) {
    int count = 0;
    for (const auto& s : cut.sides) count += s.path == r ? 1 : 0;
    expect(count == 2, std::string("path ") + path_role_name(r) + " does not have exactly two sides");
  }

  std::vector<int> preimages(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : cut.edge_map) ++preimages[e];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int want = cut.theta.edges.test(static_cast<std::size_t>(e)) ? 2 : 1;
    expect(preimages[e] == want, "edge " + std::to_string(e) + " has " + std::to_string(preimages[e]) + " copies");
  }
  std::vector<int> face_hits(faces.size(), 0);
  for (std::size_t f = 0; f < cut.face_map.size(); ++f) {
    const int target = cut.face_map[f];
    if (static_cast<int>(f) == cut.outer_face) {
      expect(target == -1, "outer face maps to an original face");
      continue;
    }
    if (target < 0 || target >= static_cast<int>(faces.size())) {
      out.push_back("disk face " + std::to_string(f) + " has no original face");
      continue;
    }
    ++face_hits[target];
    auto projected = detail::project_to_original(cut, cut.disk_faces.faces[f].boundary,
                                                 static_cast<std::size_t>(g.edge_count()));
    expect(projected == faces.faces[target].boundary,
           "disk face " + std::to_string(f) + " does not project onto the boundary of face " + std::to_string(target));
  }
  for (std::size_t f = 0; f < faces.size(); ++f)
    expect(face_hits[f] == 1, "face map is not a bijection at face " + std::to_string(f));
  for (const Dart& d : cut.boundary_walk)
    expect(cut.theta.edges.test(static_cast<std::size_t>(cut.edge_map[d.edge])), "boundary walk leaves H");
  return out;
}

}  // namespace surfbasis
