#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "surfbasis/basis.hpp"
#include "surfbasis/edge_vector.hpp"
#include "surfbasis/embedding.hpp"
#include "surfbasis/error.hpp"
#include "surfbasis/graph.hpp"

namespace surfbasis {

// Spanning tree plus the 2 - chi completing edges of the face basis. Any
// k-basis of it plus all faces but one is a (k + 2)-basis of the whole graph.
struct ReducedSubgraph {
  Multigraph graph;
  std::vector<EdgeId> edge_map;  // subgraph edge id -> original edge id
  FaceBasis face_basis;
  std::size_t universe = 0;  // original edge count
};

inline ReducedSubgraph reduce_to_subgraph(const EmbeddedGraph& eg) {
  ReducedSubgraph out;
  out.face_basis = face_basis(eg);
  const auto& g = eg.graph();
  out.universe = static_cast<std::size_t>(g.edge_count());
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!out.face_basis.tree.contains(e) &&
        std::find(out.face_basis.u_edges.begin(), out.face_basis.u_edges.end(), e) == out.face_basis.u_edges.end())
      continue;
    edges.push_back(g.edge(e));
    out.edge_map.push_back(e);
  }
  out.graph = Multigraph(g.vertex_count(), std::move(edges));
  const int expected = 2 - out.face_basis.chi;
  if (betti(out.graph) != expected)
    throw Error(ErrorKind::RankDeficit, "reduced subgraph has betti " + std::to_string(betti(out.graph)) +
                                            ", expected " + std::to_string(expected));
  return out;
}

// Lift a subgraph vector to the original edge universe.
inline EdgeVector lift_to_original(const ReducedSubgraph& r, const EdgeVector& v, std::size_t universe) {
  EdgeVector out(universe);
  for (int e : v.ones()) out.set(static_cast<std::size_t>(r.edge_map[static_cast<std::size_t>(e)]));
  return out;
}

// Faces minus the last one, followed by the lifted subgraph basis.
inline CycleBasis extend_subgraph_basis(const ReducedSubgraph& r, const CycleBasis& sub) {
  CycleBasis out;
  const auto& faces = r.face_basis.faces.faces;
  for (std::size_t f = 0; f + 1 < faces.size(); ++f)
    out.push(faces[f].boundary, {BasisLabel::Kind::Face, static_cast<int>(f)});
  for (std::size_t i = 0; i < sub.size(); ++i)
    out.push(lift_to_original(r, sub.elements[i], r.universe), {BasisLabel::Kind::Cycle, static_cast<int>(i)});
  return out;
}

// Upper bound on the largest orientable genus of a graph with Betti number
// beta: beta/2 - beta/(4 log2 beta).
inline double genus_upper_bound(double beta) {
  if (beta < 2) throw Error(ErrorKind::DomainError, "genus bound needs beta >= 2");
  return beta / 2 - beta / (4 * std::log2(beta));
}

// One step of the genus recursion: g - g/(2 log2(2g)).
inline double reduced_genus(double g) { return g - g / (2 * std::log2(2 * g)); }

// 2 log2(g) log2(1 - 1/(2 log2 2g)) + log2(1 - 1/(2 log2 2g))^2; tends to
// -1/ln 2 from above.
inline double f_eval(double g) {
  if (!(g > 1)) throw Error(ErrorKind::DomainError, "f is evaluated for g > 1");
  const double shrink = std::log2(1 - 1 / (2 * std::log2(2 * g)));
  return 2 * std::log2(g) * shrink + shrink * shrink;
}

inline double f_limit() { return -1 / std::log(2.0); }

// Smallest integer g0 >= 2 with f(g) < -epsilon for g in [g0, limit]. f is
// decreasing there, so this is the first integer crossing.
inline std::int64_t threshold_for(double epsilon, std::int64_t limit = 1'000'000) {
  if (!(epsilon > 0) || !(epsilon < -f_limit()))
    throw Error(ErrorKind::DomainError, "epsilon must lie in (0, 1/ln 2)");
  for (std::int64_t g = 2; g <= limit; ++g)
    if (f_eval(static_cast<double>(g)) < -epsilon) return g;
  throw Error(ErrorKind::NotFound, "no threshold below " + std::to_string(limit));
}

struct RecursionTrace {
  std::vector<std::int64_t> genus;  // g_0 = input, g_{i+1} = ceil(g_i - g_i/(2 log2 2g_i))
  int steps = 0;
  std::int64_t final_bound = 0;  // 2 * steps + 2 + 2 * g_final
  std::int64_t g0 = 0;
  bool stalled = false;  // ceiling stopped decreasing g above g0
};

inline constexpr int kMaxRecursionSteps = 1'000'000;

// Iterate bn(g) <= 2 + bn(g - g/(2 log2 2g)) down to g < g0, then use
// the face-basis bound 2 + 2g.
inline RecursionTrace recursion_bound(std::int64_t g, std::int64_t g0) {
  if (g < 1) throw Error(ErrorKind::DomainError, "genus must be at least 1");
  if (g0 < 2) throw Error(ErrorKind::DomainError, "threshold g0 must be at least 2");
  RecursionTrace t;
  t.g0 = g0;
  t.genus.push_back(g);
  std::int64_t cur = g;
  while (cur >= g0) {
    const auto next = static_cast<std::int64_t>(std::ceil(reduced_genus(static_cast<double>(cur))));
    // Below g = 8 the step is under one, so rounding up would repeat g.
    if (next >= cur) {
      t.stalled = true;
      break;
    }
    if (++t.steps > kMaxRecursionSteps) throw Error(ErrorKind::NonTermination, "recursion exceeded step limit");
    cur = next;
    t.genus.push_back(cur);
  }
  t.final_bound = 2 * static_cast<std::int64_t>(t.steps) + 2 + 2 * cur;
  return t;
}

// Smallest M with recursion_bound(g).final_bound <= M log2(g)^2 over the
// range. g = 1 has log2 g = 0 and is skipped.
inline double fit_constant(const std::vector<std::int64_t>& g_range, std::int64_t g0) {
  double m = 0;
  for (auto g : g_range) {
    if (g < 2) continue;
    const double l = std::log2(static_cast<double>(g));
    m = std::max(m, static_cast<double>(recursion_bound(g, g0).final_bound) / (l * l));
  }
  return m;
}

// Geometric sample 2, ..., hi (about `per_doubling` points per factor 2),
// plus every integer up to 4 * g0 where the ratio peaks.
inline std::vector<std::int64_t> sample_range(std::int64_t hi, std::int64_t g0, int per_doubling = 8) {
  std::vector<std::int64_t> out;
  for (std::int64_t g = 2; g <= std::min(hi, 4 * g0); ++g) out.push_back(g);
  const double step = std::pow(2.0, 1.0 / per_doubling);
  for (double x = static_cast<double>(4 * g0); x <= static_cast<double>(hi); x *= step)
    out.push_back(static_cast<std::int64_t>(x));
  out.push_back(hi);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace surfbasis
