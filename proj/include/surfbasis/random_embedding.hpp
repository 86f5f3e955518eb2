#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "surfbasis/embedding.hpp"
#include "surfbasis/error.hpp"
#include "surfbasis/graph.hpp"

namespace surfbasis {

struct RandomEmbeddingOptions {
  int vertices = 4;
  int edges = 8;
  std::uint64_t seed = 0;
  int target_chi = 0;
  int tries = 1000;
  bool orientable_only = false;  // force all signs positive
};

namespace detail {

// Bounded draw from the raw engine output; the standard distributions are
// implementation-defined, this keeps files identical across toolchains.
inline int draw(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

inline EmbeddedGraph random_connected_embedding(std::mt19937_64& rng, int n, int m, bool orientable_only) {
  if (n < 2 || m < n - 1) throw Error(ErrorKind::DomainError, "a connected graph needs n >= 2 and m >= n - 1");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({draw(rng, v), v});
  while (static_cast<int>(edges.size()) < m) {
    int u = draw(rng, n), v = draw(rng, n - 1);
    if (v >= u) ++v;
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  std::vector<std::vector<Dart>> rotation(static_cast<std::size_t>(n));
  for (int e = 0; e < m; ++e) {
    rotation[edges[e].u].push_back({e, 0});
    rotation[edges[e].v].push_back({e, 1});
  }
  for (auto& r : rotation)
    for (int i = static_cast<int>(r.size()) - 1; i > 0; --i) std::swap(r[i], r[draw(rng, i + 1)]);
  std::vector<int> signs(static_cast<std::size_t>(m), 1);
  if (!orientable_only)
    for (auto& s : signs) s = draw(rng, 2) == 0 ? 1 : -1;
  return EmbeddedGraph(Multigraph(n, std::move(edges)), std::move(rotation), std::move(signs));
}

}  // namespace detail

// Random connected multigraph (random tree plus random extra edges) with a
// uniformly random rotation and signature; the first try whose traced Euler
// characteristic equals the target is returned.
inline EmbeddedGraph random_embedding(const RandomEmbeddingOptions& opt) {
  if (opt.vertices < 3 || opt.edges < opt.vertices)
    throw Error(ErrorKind::DomainError, "random embeddings need vertices >= 3 and edges >= vertices");
  std::mt19937_64 rng(opt.seed);
  for (int t = 0; t < opt.tries; ++t) {
    auto eg = detail::random_connected_embedding(rng, opt.vertices, opt.edges, opt.orientable_only);
    if (euler_characteristic(eg) == opt.target_chi) {
      eg.set_name("random_n" + std::to_string(opt.vertices) + "_m" + std::to_string(opt.edges) + "_s" +
                  std::to_string(opt.seed));
      eg.set_declared_chi(opt.target_chi);
      return eg;
    }
  }
  throw Error(ErrorKind::NotFound, "no embedding with chi = " + std::to_string(opt.target_chi) + " in " +
                                       std::to_string(opt.tries) + " tries");
}

}  // namespace surfbasis
