#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "surfbasis/edge_vector.hpp"
#include "surfbasis/embedding.hpp"
#include "surfbasis/error.hpp"
#include "surfbasis/graph.hpp"

namespace surfbasis {

struct BasisLabel {
  enum class Kind { Face, Fundamental, ModifiedX, ModifiedY, Cycle };
  Kind kind = Kind::Cycle;
  int index = 0;  // face index, non-tree edge id, or element index

  std::string str() const {
    switch (kind) {
      case Kind::Face: return "face " + std::to_string(index);
      case Kind::Fundamental: return "fundamental " + std::to_string(index);
      case Kind::ModifiedX: return "modified x+h";
      case Kind::ModifiedY: return "modified y+k";
      case Kind::Cycle: break;
    }
    return "cycle " + std::to_string(index);
  }

  static BasisLabel parse(const std::string& s) {
    auto tail = [&](std::size_t n) { return std::stoi(s.substr(n)); };
    if (s.rfind("face ", 0) == 0) return {Kind::Face, tail(5)};
    if (s.rfind("fundamental ", 0) == 0) return {Kind::Fundamental, tail(12)};
    if (s == "modified x+h") return {Kind::ModifiedX, 0};
    if (s == "modified y+k") return {Kind::ModifiedY, 0};
    if (s.rfind("cycle ", 0) == 0) return {Kind::Cycle, tail(6)};
    throw Error(ErrorKind::ParseError, "unknown basis label '" + s + "'");
  }

  bool operator==(const BasisLabel&) const = default;
};

// Maximum number of vectors any single edge belongs to.
inline int sparsity(std::size_t universe, const std::vector<EdgeVector>& vectors) {
  std::vector<int> load(universe, 0);
  for (const auto& v : vectors) {
    if (v.universe() != universe) throw Error(ErrorKind::UniverseMismatch, "basis element over wrong universe");
    for (int e : v.ones()) ++load[static_cast<std::size_t>(e)];
  }
  return load.empty() ? 0 : *std::max_element(load.begin(), load.end());
}

struct CycleBasis {
  std::vector<EdgeVector> elements;
  std::vector<BasisLabel> labels;

  std::size_t size() const noexcept { return elements.size(); }
  void push(EdgeVector v, BasisLabel label) {
    elements.push_back(std::move(v));
    labels.push_back(label);
  }
  int sparsity(std::size_t universe) const { return surfbasis::sparsity(universe, elements); }
};

struct BasisCheck {
  bool is_basis = false;
  int sparsity = 0;
  int dimension = 0;  // number of vectors supplied
  int rank = 0;
  int betti = 0;
  bool all_even = true;
};

inline BasisCheck verify_basis(const Multigraph& g, const std::vector<EdgeVector>& b) {
  BasisCheck c;
  const auto universe = static_cast<std::size_t>(g.edge_count());
  for (const auto& v : b)
    if (v.universe() != universe) throw Error(ErrorKind::UniverseMismatch, "basis element over wrong universe");
  c.betti = betti(g);
  c.dimension = static_cast<int>(b.size());
  c.rank = static_cast<int>(rank_of(universe, b));
  c.all_even = std::all_of(b.begin(), b.end(), [&](const EdgeVector& v) { return is_even_subgraph(g, v); });
  c.sparsity = sparsity(universe, b);
  c.is_basis = c.dimension == c.betti && c.rank == c.dimension && c.all_even;
  return c;
}

struct FaceBasis {
  FaceSet faces;
  SpanningTree tree;
  int chi = 0;
  std::vector<EdgeId> u_edges;  // non-tree edges whose fundamental cycles complete the face boundaries
  CycleBasis basis;             // faces except the last traced one, then fundamental cycles of u_edges
};

// Face boundaries in traced order, then fundamental cycles of non-tree
// edges in increasing id, keeping those independent of what came before.
inline FaceBasis face_basis(const EmbeddedGraph& eg, const FaceSet& faces, const SpanningTree& t) {
  const auto& g = eg.graph();
  const auto universe = static_cast<std::size_t>(g.edge_count());
  FaceBasis fb;
  fb.faces = faces;
  fb.tree = t;
  fb.chi = euler_characteristic(eg, faces);
  const int target = betti(g);
  GaussianBasis gb(universe);
  for (const auto& f : faces.faces) gb.insert_if_independent(f.boundary);
  if (static_cast<int>(gb.rank()) != static_cast<int>(faces.size()) - 1)
    throw Error(ErrorKind::RankDeficit, "face boundaries have rank " + std::to_string(gb.rank()) + ", expected " +
                                            std::to_string(faces.size() - 1));
  std::vector<EdgeVector> fundamentals;
  for (EdgeId e = 0; e < g.edge_count() && static_cast<int>(gb.rank()) < target; ++e) {
    if (t.contains(e)) continue;
    auto c = fundamental_cycle(g, t, e);
    if (gb.insert_if_independent(c)) {
      fb.u_edges.push_back(e);
      fundamentals.push_back(std::move(c));
    }
  }
  if (static_cast<int>(gb.rank()) != target)
    throw Error(ErrorKind::RankDeficit, "reached rank " + std::to_string(gb.rank()) + " of " + std::to_string(target));
  if (static_cast<int>(fb.u_edges.size()) != 2 - fb.chi)
    throw Error(ErrorKind::RankDeficit, "needed " + std::to_string(fb.u_edges.size()) +
                                            " fundamental cycles, expected 2 - chi = " + std::to_string(2 - fb.chi));
  for (std::size_t f = 0; f + 1 < faces.size(); ++f)
    fb.basis.push(faces.faces[f].boundary, {BasisLabel::Kind::Face, static_cast<int>(f)});
  for (std::size_t i = 0; i < fundamentals.size(); ++i)
    fb.basis.push(fundamentals[i], {BasisLabel::Kind::Fundamental, fb.u_edges[i]});
  return fb;
}

inline FaceBasis face_basis(const EmbeddedGraph& eg) {
  require_valid(eg);
  return face_basis(eg, trace_faces(eg), spanning_tree(eg.graph()));
}

// The face basis; each edge lies in at most two faces and at most 2 - chi
// fundamental cycles, so sparsity <= 4 - chi.
inline CycleBasis sparse_basis_general(const EmbeddedGraph& eg) {
  auto fb = face_basis(eg);
  const int s = fb.basis.sparsity(static_cast<std::size_t>(eg.graph().edge_count()));
  if (s > 4 - fb.chi)
    throw Error(ErrorKind::TheoremViolation,
                "face basis has sparsity " + std::to_string(s) + " > 4 - chi = " + std::to_string(4 - fb.chi));
  return fb.basis;
}

// Faces minus one; for a spherical embedding this is a 2-basis.
inline CycleBasis maclane_basis(const EmbeddedGraph& eg) {
  auto fb = face_basis(eg);
  if (fb.chi != 2) throw Error(ErrorKind::WrongChi, "MacLane basis needs chi = 2, got " + std::to_string(fb.chi));
  return fb.basis;
}

// Projective plane: faces minus one plus a single fundamental cycle. Each
// edge is in at most two faces and the one extra cycle.
inline CycleBasis three_basis_projective(const EmbeddedGraph& eg) {
  require_valid(eg);
  auto faces = trace_faces(eg);
  const int chi = euler_characteristic(eg, faces);
  if (chi != 1) throw Error(ErrorKind::WrongChi, "projective construction needs chi = 1, got " + std::to_string(chi));
  auto fb = face_basis(eg, faces, spanning_tree(eg.graph()));
  const int s = fb.basis.sparsity(static_cast<std::size_t>(eg.graph().edge_count()));
  if (s > 3) throw Error(ErrorKind::TheoremViolation, "projective basis has sparsity " + std::to_string(s));
  return fb.basis;
}

// The four inclusions
//   x∩y ⊆ h∪k∪f0,  x∩k ⊆ h∪y∪f0,  h∩y ⊆ x∪k∪f0,  h∩k ⊆ x∪y∪f0.
struct ReplacementCheck {
  std::array<bool, 4> holds{};
  bool ok() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

inline ReplacementCheck replacement_inclusions(const EdgeVector& x, const EdgeVector& y, const EdgeVector& h,
                                               const EdgeVector& k, const EdgeVector& f0) {
  ReplacementCheck c;
  c.holds[0] = (x & y).is_subset_of(h | k | f0);
  c.holds[1] = (x & k).is_subset_of(h | y | f0);
  c.holds[2] = (h & y).is_subset_of(x | k | f0);
  c.holds[3] = (h & k).is_subset_of(x | y | f0);
  return c;
}

inline bool check_replacement_preconditions(const EdgeVector& x, const EdgeVector& y, const EdgeVector& h,
                                            const EdgeVector& k, const EdgeVector& f0) {
  return replacement_inclusions(x, y, h, k, f0).ok();
}

// (x + h, y + k). When `face_span` is given, h and k must lie in it.
inline std::pair<EdgeVector, EdgeVector> apply_replacement(const EdgeVector& x, const EdgeVector& y,
                                                           const EdgeVector& h, const EdgeVector& k,
                                                           const EdgeVector& f0,
                                                           const GaussianBasis* face_span = nullptr) {
  auto c = replacement_inclusions(x, y, h, k, f0);
  if (!c.ok()) {
    std::string which;
    static constexpr const char* names[] = {"x∩y ⊆ h∪k∪f0", "x∩k ⊆ h∪y∪f0", "h∩y ⊆ x∪k∪f0", "h∩k ⊆ x∪y∪f0"};
    for (int i = 0; i < 4; ++i)
      if (!c.holds[i]) which += (which.empty() ? "" : ", ") + std::string(names[i]);
    throw Error(ErrorKind::PreconditionFailed, "violated: " + which);
  }
  if (face_span && (!face_span->in_span(h) || !face_span->in_span(k)))
    throw Error(ErrorKind::PreconditionFailed, "h or k is not a sum of face boundaries");
  return {x ^ h, y ^ k};
}

}  // namespace surfbasis
