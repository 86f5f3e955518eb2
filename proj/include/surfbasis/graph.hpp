#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "surfbasis/edge_vector.hpp"
#include "surfbasis/error.hpp"

namespace surfbasis {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

// Loopless multigraph; edge id = position in the edge list.
class Multigraph {
 public:
  Multigraph() = default;

  Multigraph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw Error(ErrorKind::InvalidGraph, "negative vertex count");
    incidence_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
        throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(i) + " has an endpoint out of range");
      if (e.u == e.v) throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(i) + " is a loop");
      incidence_[e.u].push_back(static_cast<EdgeId>(i));
      incidence_[e.v].push_back(static_cast<EdgeId>(i));
    }
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  // Incident edge ids in increasing order.
  const std::vector<EdgeId>& incident(VertexId v) const { return incidence_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  EdgeVector empty_vector() const { return EdgeVector(edges_.size()); }

  bool is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : incident(v)) {
        VertexId w = edge(e).other(v);
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n_;
  }

  bool operator==(const Multigraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

inline void require_connected(const Multigraph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::DisconnectedGraph, "graph is not connected");
}

inline int betti(const Multigraph& g) {
  require_connected(g);
  return g.edge_count() - g.vertex_count() + 1;
}

// BFS tree rooted at vertex 0.
struct SpanningTree {
  std::vector<EdgeId> tree_edges;   // sorted
  std::vector<char> in_tree;        // per edge
  std::vector<EdgeId> parent_edge;  // per vertex, -1 at the root
  std::vector<VertexId> parent;     // per vertex, -1 at the root
  std::vector<int> depth;

  bool contains(EdgeId e) const { return in_tree[static_cast<std::size_t>(e)] != 0; }
};

// Breadth-first from vertex 0; each vertex scans its incident edges in
// increasing id order, so ties go to the smallest edge id.
inline SpanningTree spanning_tree(const Multigraph& g) {
  require_connected(g);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  SpanningTree t;
  t.in_tree.assign(static_cast<std::size_t>(g.edge_count()), 0);
  t.parent_edge.assign(n, -1);
  t.parent.assign(n, -1);
  t.depth.assign(n, -1);
  std::deque<VertexId> queue{0};
  t.depth[0] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.edge(e).other(v);
      if (t.depth[w] >= 0) continue;
      t.depth[w] = t.depth[v] + 1;
      t.parent[w] = v;
      t.parent_edge[w] = e;
      t.in_tree[e] = 1;
      t.tree_edges.push_back(e);
      queue.push_back(w);
    }
  }
  std::sort(t.tree_edges.begin(), t.tree_edges.end());
  return t;
}

// Edges of the tree path between a and b.
inline std::vector<EdgeId> tree_path(const SpanningTree& t, VertexId a, VertexId b) {
  std::vector<EdgeId> from_a, from_b;
  while (a != b) {
    if (t.depth[a] >= t.depth[b]) {
      from_a.push_back(t.parent_edge[a]);
      a = t.parent[a];
    } else {
      from_b.push_back(t.parent_edge[b]);
      b = t.parent[b];
    }
  }
  from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
  return from_a;
}

inline EdgeVector fundamental_cycle(const Multigraph& g, const SpanningTree& t, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) throw Error(ErrorKind::InvalidGraph, "edge id out of range");
  if (t.contains(e)) throw Error(ErrorKind::EdgeInTree, "edge " + std::to_string(e) + " is a tree edge");
  EdgeVector c = g.empty_vector();
  c.set(static_cast<std::size_t>(e));
  for (EdgeId p : tree_path(t, g.edge(e).u, g.edge(e).v)) c.set(static_cast<std::size_t>(p));
  return c;
}

// True iff every vertex has even degree in the edge subset.
inline bool is_even_subgraph(const Multigraph& g, const EdgeVector& v) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : v.ones()) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

// Connected and 2-regular on its support.
inline bool is_single_cycle(const Multigraph& g, const EdgeVector& v) {
  auto edges = v.ones();
  if (edges.empty()) return false;
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 0 && d != 2; })) return false;
  // Walk from one vertex and check all support edges are reached.
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  VertexId start = g.edge(edges.front()).u;
  std::vector<VertexId> stack{start};
  std::size_t reached = 0;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  seen[start] = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      if (!v.test(static_cast<std::size_t>(e)) || used[e]) continue;
      used[e] = 1;
      ++reached;
      VertexId y = g.edge(e).other(x);
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return reached == edges.size();
}

}  // namespace surfbasis
