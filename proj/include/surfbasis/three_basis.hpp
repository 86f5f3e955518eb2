#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "surfbasis/basis.hpp"
#include "surfbasis/cut_polygon.hpp"
#include "surfbasis/edge_vector.hpp"
#include "surfbasis/embedding.hpp"
#include "surfbasis/error.hpp"
#include "surfbasis/graph.hpp"

namespace surfbasis {

enum class ReplacementCase { Disjoint, SeparatingPath, LastContact };

inline const char* case_name(ReplacementCase c) {
  switch (c) {
    case ReplacementCase::Disjoint: return "disjoint";
    case ReplacementCase::SeparatingPath: return "case1";
    case ReplacementCase::LastContact: return "case2";
  }
  return "?";
}

// Everything needed to replay and audit one replacement step.
struct ReplacementWitness {
  ReplacementCase case_tag = ReplacementCase::Disjoint;
  EdgeVector x, y;  // the pair actually modified (after any role swap)
  EdgeVector h, k;
  int f0 = -1;  // original face index
  // Theta path playing the x-only, y-only and shared roles for (x, y).
  std::array<int, 3> roles{kOnlyX, kOnlyY, kShared};
  // Case 1: the path Q inside f0, as disk vertices and disk edges.
  std::vector<VertexId> q_vertices;
  std::vector<EdgeId> q_edges;
  std::vector<int> below_faces;  // original faces summed into h = k
  // Case 2.
  VertexId v0 = -1;  // disk vertex
  std::vector<int> faces_before, faces_after;  // I_x and I_y, original faces

  std::string describe() const {
    std::ostringstream os;
    os << "case " << case_name(case_tag) << ", f0 = face " << f0 << ", roles (x,y,xy) = (" << path_role_name(roles[0])
       << "," << path_role_name(roles[1]) << "," << path_role_name(roles[2]) << ")\n";
    os << "x = " << x << "\ny = " << y << "\nh = " << h << "\nk = " << k << "\n";
    if (!q_vertices.empty()) {
      os << "Q vertices (disk):";
      for (auto v : q_vertices) os << ' ' << v;
      os << "\nfaces below Q:";
      for (auto f : below_faces) os << ' ' << f;
      os << '\n';
    }
    if (v0 >= 0) {
      os << "v0 (disk) = " << v0 << "\nI_x:";
      for (auto f : faces_before) os << ' ' << f;
      os << "\nI_y:";
      for (auto f : faces_after) os << ' ' << f;
      os << '\n';
    }
    return os.str();
  }
};

struct ThreeBasisResult {
  CycleBasis basis;
  ReplacementWitness witness;
  FaceBasis face_basis;
  std::optional<CutPolygon> cut;  // present unless x and y were edge-disjoint
};

namespace detail {

struct SimplePath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// Walk positions i..j (cyclic) of a face, with repeated vertices shortcut.
inline SimplePath loop_erased_subwalk(const CutPolygon& cut, int face, int i, int j) {
  const auto& walk = cut.disk_faces.faces[static_cast<std::size_t>(face)].walk;
  const int L = static_cast<int>(walk.size());
  const auto& dg = cut.disk.graph();
  SimplePath p;
  p.vertices.push_back(dart_vertex(dg, walk[i].dart));
  for (int s = i; s != j; s = (s + 1) % L) {
    const Dart d = walk[s].dart;
    const VertexId next = dart_vertex(dg, d.opposite());
    auto it = std::find(p.vertices.begin(), p.vertices.end(), next);
    if (it != p.vertices.end()) {
      const auto keep = static_cast<std::size_t>(it - p.vertices.begin());
      p.vertices.resize(keep + 1);
      p.edges.resize(keep);
    } else {
      p.vertices.push_back(next);
      p.edges.push_back(d.edge);
    }
  }
  return p;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Every edge on the face's closed walk. Edges walked twice have the face on
// both sides, belong to no face boundary, and so carry no face load.
inline EdgeVector face_closure(const FaceSet& faces, int f, std::size_t universe) {
  EdgeVector c(universe);
  for (const auto& st : faces.faces[static_cast<std::size_t>(f)].walk) c.set(static_cast<std::size_t>(st.dart.edge));
  return c;
}

inline EdgeVector sum_of_faces(const FaceSet& faces, const std::vector<int>& ids, std::size_t universe) {
  EdgeVector s(universe);
  for (int f : ids) s ^= faces.faces[static_cast<std::size_t>(f)].boundary;
  return s;
}

// x' = P_rx ∪ P_rxy and y' = P_ry ∪ P_rxy, so that x' ∩ y' = P_rxy.
inline std::pair<EdgeVector, EdgeVector> cycles_for_roles(const Theta& th, const std::array<int, 3>& roles) {
  const auto& shared = th.paths[roles[2]].edge_set;
  return {th.paths[roles[0]].edge_set | shared, th.paths[roles[1]].edge_set | shared};
}

// Faces strictly on the side of Q (closed off outside the polygon) that
// contains the non-Q edges of the `below_side`. Empty optional when the
// two copies of the shared path are not separated by Q.
inline std::optional<std::vector<int>> faces_below(const CutPolygon& cut, const SimplePath& q, int below_side,
                                                   int above_side) {
  const int L = static_cast<int>(cut.boundary_walk.size());
  auto boundary_pos = [&](VertexId v) {
    auto it = std::find(cut.boundary_vertices.begin(), cut.boundary_vertices.end(), v);
    return it == cut.boundary_vertices.end() ? -1 : static_cast<int>(it - cut.boundary_vertices.begin());
  };
  const int pa = boundary_pos(q.vertices.front());
  const int pb = boundary_pos(q.vertices.back());
  if (pa < 0 || pb < 0 || pa == pb) return std::nullopt;

  const int disk_m = cut.disk.graph().edge_count();
  std::vector<char> on_q(static_cast<std::size_t>(disk_m), 0);
  for (EdgeId e : q.edges) on_q[e] = 1;
  // Arc 0 runs along the boundary walk from Q's start to its end.
  std::vector<int> arc(static_cast<std::size_t>(disk_m), -1);
  for (int i = 0; i < L; ++i) {
    const int offset = ((i - pa) % L + L) % L;
    const int span = ((pb - pa) % L + L) % L;
    arc[cut.boundary_walk[i].edge] = offset < span ? 0 : 1;
  }
  auto side_arc = [&](int s) {
    int a = -1;
    for (EdgeId e : cut.sides[s].edges) {
      if (on_q[e]) continue;
      if (a < 0) a = arc[e];
      else if (a != arc[e]) return -2;
    }
    return a;
  };
  const int below_arc = side_arc(below_side);
  const int above_arc = side_arc(above_side);
  if (below_arc == -2 || above_arc == -2) return std::nullopt;
  if (below_arc >= 0 && above_arc >= 0 && below_arc == above_arc) return std::nullopt;
  const int chosen = below_arc >= 0 ? below_arc : (above_arc >= 0 ? 1 - above_arc : 0);

  const int nf = static_cast<int>(cut.disk_faces.size());
  const int outer_node[2] = {nf, nf + 1};
  UnionFind uf(nf + 2);
  for (EdgeId e = 0; e < disk_m; ++e) {
    if (on_q[e]) continue;
    int a = cut.edge_faces[e][0], b = cut.edge_faces[e][1];
    if (a == cut.outer_face) a = outer_node[arc[e]];
    if (b == cut.outer_face) b = outer_node[arc[e]];
    uf.unite(a, b);
  }
  const int r0 = uf.find(outer_node[0]), r1 = uf.find(outer_node[1]);
  if (r0 == r1) return std::nullopt;
  const int below_root = chosen == 0 ? r0 : r1;
  std::vector<int> out;
  for (int f = 0; f < nf; ++f) {
    if (f == cut.outer_face) continue;
    const int r = uf.find(f);
    if (r != r0 && r != r1) return std::nullopt;
    if (r == below_root) out.push_back(cut.face_map[f]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool interior_to_side(const PolygonSide& side, VertexId v) {
  for (std::size_t i = 1; i + 1 < side.vertices.size(); ++i)
    if (side.vertices[i] == v) return true;
  return false;
}

inline std::array<int, 3> roles_with_shared(int shared) {
  std::array<int, 3> r{};
  int n = 0;
  for (int p = 0; p < 3; ++p)
    if (p != shared) r[n++] = p;
  r[2] = shared;
  return r;
}

inline bool sides_non_consecutive(const std::vector<int>& a, const std::vector<int>& b) {
  for (int s : a)
    for (int t : b)
      if (s != t && !CutPolygon::consecutive(s, t)) return true;
  return false;
}

// Case 1: a face whose boundary joins two non-consecutive sides.
inline bool face_touches_far_sides(const CutPolygon& cut, int face) {
  auto verts = cut.face_vertices(face);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (sides_non_consecutive(cut.vertex_sides[verts[i]], cut.vertex_sides[verts[j]])) return true;
  return false;
}

inline std::optional<ReplacementWitness> try_separating_path(const CutPolygon& cut, const FaceSet& faces,
                                                             std::size_t universe) {
  const Theta& th = cut.theta;
  for (int f = 0; f < static_cast<int>(cut.disk_faces.size()); ++f) {
    if (f == cut.outer_face) continue;
    auto verts = cut.face_vertices(f);
    const int L = static_cast<int>(verts.size());
    for (int i = 0; i < L; ++i) {
      for (int j = i + 1; j < L; ++j) {
        if (!sides_non_consecutive(cut.vertex_sides[verts[i]], cut.vertex_sides[verts[j]])) continue;
        for (auto [from, to] : {std::pair{i, j}, std::pair{j, i}}) {
          SimplePath q = loop_erased_subwalk(cut, f, from, to);
          if (q.edges.empty()) continue;
          for (int shared : {static_cast<int>(kShared), static_cast<int>(kOnlyX), static_cast<int>(kOnlyY)}) {
            std::vector<int> shared_sides;
            for (int s = 0; s < 6; ++s)
              if (cut.sides[s].path == shared) shared_sides.push_back(s);
            bool interior = false;
            for (int s : shared_sides)
              interior = interior || interior_to_side(cut.sides[s], q.vertices.front()) ||
                         interior_to_side(cut.sides[s], q.vertices.back());
            if (interior) continue;
            auto below = faces_below(cut, q, shared_sides[0], shared_sides[1]);
            if (!below) continue;
            ReplacementWitness w;
            w.case_tag = ReplacementCase::SeparatingPath;
            w.roles = roles_with_shared(shared);
            std::tie(w.x, w.y) = cycles_for_roles(th, w.roles);
            w.h = sum_of_faces(faces, *below, universe);
            w.k = w.h;
            w.f0 = cut.face_map[f];
            w.q_vertices = q.vertices;
            w.q_edges = q.edges;
            w.below_faces = *below;
            if (check_replacement_preconditions(w.x, w.y, w.h, w.k, face_closure(faces, w.f0, universe))) return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Case 2: no face reaches across the polygon. Pick a shared-path side
// flanked by an x side and a y side, walk it from the x end, and split its
// incident faces at the last vertex v0 that shares a face with the x side.
inline std::optional<ReplacementWitness> try_last_contact(const CutPolygon& cut, const FaceSet& faces,
                                                          std::size_t universe) {
  const Theta& th = cut.theta;
  const int nf = static_cast<int>(cut.disk_faces.size());
  std::vector<std::vector<VertexId>> face_verts(static_cast<std::size_t>(nf));
  for (int f = 0; f < nf; ++f) {
    face_verts[f] = cut.face_vertices(f);
    std::sort(face_verts[f].begin(), face_verts[f].end());
  }
  auto face_has = [&](int f, VertexId v) { return std::binary_search(face_verts[f].begin(), face_verts[f].end(), v); };
  auto interior_face_of = [&](EdgeId e) {
    return cut.edge_faces[e][0] == cut.outer_face ? cut.edge_faces[e][1] : cut.edge_faces[e][0];
  };

  for (int shared : {static_cast<int>(kShared), static_cast<int>(kOnlyX), static_cast<int>(kOnlyY)}) {
    for (int s = 0; s < 6; ++s) {
      if (cut.sides[s].path != shared) continue;
      const int prev = (s + 5) % 6, next = (s + 1) % 6;
      if (cut.sides[prev].path == shared || cut.sides[next].path == shared ||
          cut.sides[prev].path == cut.sides[next].path)
        continue;
      for (int x_side : {prev, next}) {
        const PolygonSide& side = cut.sides[s];
        std::vector<VertexId> pv = side.vertices;
        std::vector<EdgeId> pe = side.edges;
        if (x_side == next) {
          std::reverse(pv.begin(), pv.end());
          std::reverse(pe.begin(), pe.end());
        }
        const auto& xv = cut.sides[x_side].vertices;
        auto touches_x_side = [&](int f) {
          return std::any_of(xv.begin(), xv.end(), [&](VertexId v) { return face_has(f, v); });
        };
        int v0_index = -1;
        std::vector<int> f0_candidates;
        for (int i = static_cast<int>(pv.size()) - 1; i >= 0 && v0_index < 0; --i) {
          for (int f = 0; f < nf; ++f)
            if (f != cut.outer_face && face_has(f, pv[i]) && touches_x_side(f)) f0_candidates.push_back(f);
          if (!f0_candidates.empty()) v0_index = i;
        }
        if (v0_index < 0) continue;
        std::vector<int> before, after;
        for (int i = 0; i < static_cast<int>(pe.size()); ++i)
          (i < v0_index ? before : after).push_back(cut.face_map[interior_face_of(pe[i])]);
        for (auto* list : {&before, &after}) {
          std::sort(list->begin(), list->end());
          list->erase(std::unique(list->begin(), list->end()), list->end());
        }
        ReplacementWitness w;
        w.case_tag = ReplacementCase::LastContact;
        w.roles = {cut.sides[x_side].path, cut.sides[x_side == prev ? next : prev].path, shared};
        std::tie(w.x, w.y) = cycles_for_roles(th, w.roles);
        w.h = sum_of_faces(faces, before, universe);
        w.k = sum_of_faces(faces, after, universe);
        w.v0 = pv[v0_index];
        w.faces_before = before;
        w.faces_after = after;
        for (int f : f0_candidates) {
          w.f0 = cut.face_map[f];
          if (check_replacement_preconditions(w.x, w.y, w.h, w.k, face_closure(faces, w.f0, universe))) return w;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// A 3-basis for a cellular embedding with Euler characteristic 0: faces
// minus f0 together with x + h and y + k, where (x, y) are the two extra
// fundamental cycles of the face basis and h, k are sums of faces chosen
// so that (x + h) ∩ (y + k) lies on the closed walk of f0. An edge there is
// either in f0's boundary (and in at most one other face) or walked twice by
// f0 (and in no face boundary), so no edge exceeds three memberships.
inline ThreeBasisResult three_basis(const EmbeddedGraph& eg) {
  require_valid(eg);
  const auto& g = eg.graph();
  const auto universe = static_cast<std::size_t>(g.edge_count());
  auto faces = trace_faces(eg);
  const int chi = euler_characteristic(eg, faces);
  if (chi != 0) throw Error(ErrorKind::WrongChi, "three_basis needs chi = 0, got " + std::to_string(chi));

  ThreeBasisResult res;
  res.face_basis = face_basis(eg, faces, spanning_tree(g));
  const auto& fb = res.face_basis;
  const EdgeVector x = fundamental_cycle(g, fb.tree, fb.u_edges[0]);
  const EdgeVector y = fundamental_cycle(g, fb.tree, fb.u_edges[1]);

  GaussianBasis face_span(universe);
  for (const auto& f : faces.faces) face_span.insert_if_independent(f.boundary);

  ReplacementWitness w;
  if ((x & y).none()) {
    w.case_tag = ReplacementCase::Disjoint;
    w.x = x;
    w.y = y;
    w.h = EdgeVector(universe);
    w.k = EdgeVector(universe);
    w.f0 = static_cast<int>(faces.size()) - 1;
  } else {
    res.cut = cut_along_theta(eg, faces, x, y);
    const CutPolygon& cut = *res.cut;
    bool far_contact = false;
    for (int f = 0; f < static_cast<int>(cut.disk_faces.size()) && !far_contact; ++f)
      far_contact = f != cut.outer_face && detail::face_touches_far_sides(cut, f);
    auto found = far_contact ? detail::try_separating_path(cut, faces, universe)
                             : detail::try_last_contact(cut, faces, universe);
    if (!found)
      throw Error(ErrorKind::TheoremViolation,
                  std::string("no replacement witness found (") + (far_contact ? "case 1" : "case 2") +
                      "); x = " + [&] { std::ostringstream os; os << x << ", y = " << y; return os.str(); }());
    w = std::move(*found);
  }

  const EdgeVector f0 = detail::face_closure(faces, w.f0, universe);
  auto [x2, y2] = apply_replacement(w.x, w.y, w.h, w.k, f0, &face_span);
  if (!(x2 & y2).is_subset_of(f0))
    throw Error(ErrorKind::TheoremViolation, "(x+h) ∩ (y+k) is not inside f0\n" + w.describe());

  for (std::size_t f = 0; f < faces.size(); ++f)
    if (static_cast<int>(f) != w.f0) res.basis.push(faces.faces[f].boundary, {BasisLabel::Kind::Face, static_cast<int>(f)});
  if (w.case_tag == ReplacementCase::Disjoint) {
    res.basis.push(x2, {BasisLabel::Kind::Fundamental, fb.u_edges[0]});
    res.basis.push(y2, {BasisLabel::Kind::Fundamental, fb.u_edges[1]});
  } else {
    res.basis.push(x2, {BasisLabel::Kind::ModifiedX, 0});
    res.basis.push(y2, {BasisLabel::Kind::ModifiedY, 0});
  }
  res.witness = std::move(w);

  auto check = verify_basis(g, res.basis.elements);
  if (!check.is_basis || check.sparsity > 3)
    throw Error(ErrorKind::TheoremViolation, "assembled basis fails verification (is_basis = " +
                                                 std::to_string(check.is_basis) + ", sparsity = " +
                                                 std::to_string(check.sparsity) + ")\n" + res.witness.describe());
  return res;
}

}  // namespace surfbasis
