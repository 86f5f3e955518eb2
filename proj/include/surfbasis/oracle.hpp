#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "surfbasis/basis.hpp"
#include "surfbasis/edge_vector.hpp"
#include "surfbasis/embedding.hpp"
#include "surfbasis/error.hpp"
#include "surfbasis/graph.hpp"
#include "surfbasis/three_basis.hpp"

namespace surfbasis {

inline constexpr int kMaxBruteForceBetti = 8;
inline constexpr int kMaxPlanarityVertices = 40;

struct BruteForceResult {
  int k = 0;
  CycleBasis basis;  // a k-basis attaining the minimum
};

namespace detail {

// Depth-first search for `target` independent cycle-space vectors with every
// edge load at most k. Candidates are visited in canonical order and chosen
// with increasing index, so each unordered basis is met once.
class BasisSearch {
 public:
  BasisSearch(std::vector<EdgeVector> vectors, std::vector<std::uint32_t> coefficients, int target, int edges)
      : vectors_(std::move(vectors)), coeffs_(std::move(coefficients)), target_(target), edges_(edges) {}

  std::optional<std::vector<int>> run(int k) {
    k_ = k;
    load_.assign(static_cast<std::size_t>(edges_), 0);
    chosen_.clear();
    pivots_.fill(0);
    if (dfs(0, 0)) return chosen_;
    return std::nullopt;
  }

 private:
  // Reduce a coefficient mask against the chosen ones (kept fully reduced by
  // pivot bit); zero means dependent.
  std::uint32_t reduce(std::uint32_t c) const {
    for (int b = 0; b < 32; ++b)
      if ((c >> b & 1U) && pivots_[b]) c ^= pivots_[b];
    return c;
  }

  bool dfs(std::size_t start, int total_load) {
    const int remaining = target_ - static_cast<int>(chosen_.size());
    if (remaining == 0) return true;
    for (std::size_t i = start; i + static_cast<std::size_t>(remaining) <= vectors_.size(); ++i) {
      const int pop = static_cast<int>(vectors_[i].count());
      // Later candidates are at least as heavy as this one.
      if (total_load + remaining * pop > k_ * edges_) return false;
      const auto ones = vectors_[i].ones();
      bool fits = true;
      for (int e : ones)
        if (load_[e] >= k_) {
          fits = false;
          break;
        }
      if (!fits) continue;
      const std::uint32_t r = reduce(coeffs_[i]);
      if (r == 0) continue;
      int bit = 0;
      while (!(r >> bit & 1U)) ++bit;
      auto saved = pivots_;
      for (auto& p : pivots_)
        if (p >> bit & 1U) p ^= r;
      pivots_[bit] = r;
      for (int e : ones) ++load_[e];
      chosen_.push_back(static_cast<int>(i));
      if (dfs(i + 1, total_load + pop)) return true;
      chosen_.pop_back();
      for (int e : ones) --load_[e];
      pivots_ = saved;
    }
    return false;
  }

  std::vector<EdgeVector> vectors_;
  std::vector<std::uint32_t> coeffs_;
  int target_;
  int edges_;
  int k_ = 0;
  std::vector<int> load_;
  std::vector<int> chosen_;
  std::array<std::uint32_t, 32> pivots_{};
};

}  // namespace detail

// Exact basis number by exhaustive search over the nonzero cycle-space
// vectors, trying k = 1, 2, ... up to k_max.
inline BruteForceResult brute_force_basis_number(const Multigraph& g, int k_max) {
  if (k_max < 1) throw Error(ErrorKind::DomainError, "k_max must be positive");
  require_connected(g);
  const int beta = betti(g);
  if (beta > kMaxBruteForceBetti)
    throw Error(ErrorKind::TooLarge, "betti number " + std::to_string(beta) + " exceeds the brute-force limit of " +
                                         std::to_string(kMaxBruteForceBetti));
  BruteForceResult out;
  if (beta == 0) return out;

  const auto t = spanning_tree(g);
  std::vector<EdgeVector> fundamentals;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!t.contains(e)) fundamentals.push_back(fundamental_cycle(g, t, e));

  const std::uint32_t total = (1U << beta) - 1;
  std::vector<std::pair<EdgeVector, std::uint32_t>> all;
  for (std::uint32_t mask = 1; mask <= total; ++mask) {
    EdgeVector v = g.empty_vector();
    for (int b = 0; b < beta; ++b)
      if (mask >> b & 1U) v ^= fundamentals[b];
    all.emplace_back(std::move(v), mask);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  std::vector<EdgeVector> vectors;
  std::vector<std::uint32_t> coeffs;
  for (auto& [v, c] : all) {
    vectors.push_back(std::move(v));
    coeffs.push_back(c);
  }

  detail::BasisSearch search(vectors, coeffs, beta, g.edge_count());
  for (int k = 1; k <= k_max; ++k) {
    if (auto found = search.run(k)) {
      out.k = k;
      for (std::size_t i = 0; i < found->size(); ++i)
        out.basis.push(vectors[(*found)[i]], {BasisLabel::Kind::Cycle, static_cast<int>(i)});
      return out;
    }
  }
  throw Error(ErrorKind::NotFound, "no basis with every edge in at most " + std::to_string(k_max) + " elements");
}

enum class KuratowskiKind { None, K5, K33 };

inline const char* kuratowski_name(KuratowskiKind k) {
  switch (k) {
    case KuratowskiKind::K5: return "K5";
    case KuratowskiKind::K33: return "K3,3";
    case KuratowskiKind::None: break;
  }
  return "none";
}

// Structural check that `edges` form a subdivision of K5 or K3,3: branch
// vertices of degree 4 (five of them) or 3 (six, bipartite 3+3), every other
// touched vertex of degree 2, and each pair of branch vertices that must be
// adjacent joined by exactly one branch path.
inline KuratowskiKind classify_kuratowski(const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::vector<char> in(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count() || in[e]) return KuratowskiKind::None;
    in[e] = 1;
  }
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  std::vector<VertexId> branch;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] == 0 || deg[v] == 2) continue;
    if (deg[v] != 3 && deg[v] != 4) return KuratowskiKind::None;
    branch.push_back(v);
  }
  KuratowskiKind kind = KuratowskiKind::None;
  if (branch.size() == 5 && std::all_of(branch.begin(), branch.end(), [&](VertexId v) { return deg[v] == 4; }))
    kind = KuratowskiKind::K5;
  else if (branch.size() == 6 && std::all_of(branch.begin(), branch.end(), [&](VertexId v) { return deg[v] == 3; }))
    kind = KuratowskiKind::K33;
  else
    return KuratowskiKind::None;

  std::vector<int> branch_index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < branch.size(); ++i) branch_index[branch[i]] = static_cast<int>(i);
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<std::vector<int>> adj(branch.size(), std::vector<int>(branch.size(), 0));
  std::size_t used_count = 0;
  for (VertexId start : branch) {
    for (EdgeId first : g.incident(start)) {
      if (!in[first] || used[first]) continue;
      VertexId at = start;
      EdgeId e = first;
      for (;;) {
        used[e] = 1;
        ++used_count;
        at = g.edge(e).other(at);
        if (branch_index[at] >= 0) break;
        EdgeId next = -1;
        for (EdgeId f : g.incident(at))
          if (in[f] && !used[f]) next = f;
        if (next < 0) return KuratowskiKind::None;
        e = next;
      }
      const int a = branch_index[start], b = branch_index[at];
      if (a == b || adj[a][b]) return KuratowskiKind::None;
      adj[a][b] = adj[b][a] = 1;
    }
  }
  if (used_count != edges.size()) return KuratowskiKind::None;  // stray cycle through degree-2 vertices

  const int nb = static_cast<int>(branch.size());
  if (kind == KuratowskiKind::K5) {
    for (int a = 0; a < nb; ++a)
      for (int b = a + 1; b < nb; ++b)
        if (!adj[a][b]) return KuratowskiKind::None;
    return kind;
  }
  // K3,3: the neighbours of branch 0 form one side, the rest the other.
  std::vector<int> side(static_cast<std::size_t>(nb), 0);
  for (int b = 1; b < nb; ++b) side[b] = adj[0][b] ? 1 : 0;
  if (std::count(side.begin(), side.end(), 1) != 3) return KuratowskiKind::None;
  for (int a = 0; a < nb; ++a)
    for (int b = a + 1; b < nb; ++b)
      if (adj[a][b] != (side[a] != side[b] ? 1 : 0)) return KuratowskiKind::None;
  return kind;
}

struct PlanarityResult {
  bool planar = false;
  std::optional<EmbeddedGraph> embedding;  // spherical rotation system when planar
  std::vector<EdgeId> kuratowski;          // subdivision edge ids when not
  KuratowskiKind kind = KuratowskiKind::None;
};

namespace detail {

using PlanarityGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>,
                                             boost::property<boost::edge_index_t, int>>;
using PlanarityEdge = boost::graph_traits<PlanarityGraph>::edge_descriptor;

// Simple graph on the given (u, v) pairs; edge index = position.
inline PlanarityGraph planarity_graph(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  PlanarityGraph bg(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    boost::add_edge(pairs[i].first, pairs[i].second, static_cast<int>(i), bg);
  return bg;
}

inline bool pairs_planar(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  auto bg = planarity_graph(n, pairs);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace detail

// Planarity with certificates. The planar side is checked by face tracing
// (chi = 2), the non-planar side by classify_kuratowski.
inline PlanarityResult is_planar(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > kMaxPlanarityVertices)
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices exceeds the planarity limit of " +
                                         std::to_string(kMaxPlanarityVertices));
  // Parallel edges go to their lowest-id representative.
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> classes;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    classes[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back(e);
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<EdgeId> representative;
  std::map<EdgeId, std::vector<EdgeId>> copies;
  for (const auto& [ends, ids] : classes) {
    pairs.push_back(ends);
    representative.push_back(ids.front());
    copies[ids.front()] = ids;
  }
  auto bg = detail::planarity_graph(n, pairs);
  std::vector<std::vector<detail::PlanarityEdge>> emb(static_cast<std::size_t>(n));
  std::vector<detail::PlanarityEdge> kur;
  const auto edge_index = boost::get(boost::edge_index, bg);
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));

  PlanarityResult out;
  out.planar = planar;
  if (planar) {
    std::vector<std::vector<Dart>> rotation(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
      for (const auto& be : emb[v]) {
        const EdgeId r = representative[edge_index[be]];
        const auto& ids = copies[r];
        // Copies sit next to each other, in opposite order at the two ends,
        // so consecutive copies bound digon faces.
        const bool low_end = v == std::min(g.edge(r).u, g.edge(r).v);
        auto push = [&](EdgeId e) { rotation[v].push_back({e, g.edge(e).u == v ? 0 : 1}); };
        if (low_end)
          for (auto it = ids.begin(); it != ids.end(); ++it) push(*it);
        else
          for (auto it = ids.rbegin(); it != ids.rend(); ++it) push(*it);
      }
    }
    out.embedding = EmbeddedGraph::orientable(g, std::move(rotation));
    if (g.is_connected() && euler_characteristic(*out.embedding) != 2)
      throw Error(ErrorKind::TheoremViolation, "planar embedding does not trace to chi = 2");
    return out;
  }
  // The reported subgraph can carry extra edges; drop every edge whose
  // removal keeps it non-planar. What remains is edge-minimal non-planar.
  std::vector<int> kept;
  for (const auto& be : kur) kept.push_back(edge_index[be]);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<std::pair<VertexId, VertexId>> trial;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) trial.push_back(pairs[kept[j]]);
    if (!detail::pairs_planar(n, trial))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  for (int i : kept) out.kuratowski.push_back(representative[i]);
  std::sort(out.kuratowski.begin(), out.kuratowski.end());
  out.kind = classify_kuratowski(g, out.kuratowski);
  if (out.kind == KuratowskiKind::None)
    throw Error(ErrorKind::TheoremViolation, "Kuratowski certificate failed structural validation");
  return out;
}

// Every block a cycle or a bridge. Equivalently, the fundamental cycles of
// one spanning tree are pairwise edge-disjoint; then they are a 1-basis, and
// otherwise some block holds a theta, which no 1-basis can cover.
inline bool is_cactus(const Multigraph& g) {
  require_connected(g);
  const auto t = spanning_tree(g);
  EdgeVector seen = g.empty_vector();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (t.contains(e)) continue;
    auto c = fundamental_cycle(g, t, e);
    if ((c & seen).any()) return false;
    seen |= c;
  }
  return true;
}

struct ExactBasisNumber {
  int k = 0;
  CycleBasis basis;  // attains k
  PlanarityResult planarity;
  std::optional<ReplacementWitness> witness;  // set by the torus / Klein bottle route
  std::string proof;
};

// Exact basis number of a graph embedded with chi 0 or 1. Non-planar graphs
// have no 2-basis, and the surface construction gives a 3-basis.
inline ExactBasisNumber basis_number_exact(const EmbeddedGraph& eg) {
  require_valid(eg);
  const auto& g = eg.graph();
  const auto faces = trace_faces(eg);
  const int chi = euler_characteristic(eg, faces);
  if (chi != 0 && chi != 1)
    throw Error(ErrorKind::WrongChi, "exact basis number needs chi 0 or 1, got " + std::to_string(chi));
  ExactBasisNumber out;
  out.planarity = is_planar(g);
  std::ostringstream proof;
  if (out.planarity.planar) {
    if (betti(g) == 0) {
      out.k = 0;
      proof << "forest: empty basis";
    } else if (is_cactus(g)) {
      out.k = 1;
      const auto t = spanning_tree(g);
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!t.contains(e)) out.basis.push(fundamental_cycle(g, t, e), {BasisLabel::Kind::Fundamental, e});
      proof << "cactus: edge-disjoint fundamental cycles";
    } else {
      out.k = 2;
      out.basis = maclane_basis(*out.planarity.embedding);
      proof << "planar, not a cactus: faces of a spherical embedding minus one; a theta block rules out k = 1";
    }
  } else {
    out.k = 3;
    if (chi == 0) {
      auto r = three_basis(eg);
      out.basis = std::move(r.basis);
      out.witness = std::move(r.witness);
      proof << "non-planar (" << kuratowski_name(out.planarity.kind) << " subdivision on "
            << out.planarity.kuratowski.size() << " edges), no 2-basis; 3-basis from the " << case_name(out.witness->case_tag)
            << " replacement";
    } else {
      out.basis = three_basis_projective(eg);
      proof << "non-planar (" << kuratowski_name(out.planarity.kind) << " subdivision on "
            << out.planarity.kuratowski.size() << " edges), no 2-basis; 3-basis of faces plus one fundamental cycle";
    }
  }
  const auto check = verify_basis(g, out.basis.elements);
  if (!check.is_basis || check.sparsity > out.k)
    throw Error(ErrorKind::TheoremViolation, "basis attaining k = " + std::to_string(out.k) + " failed verification");
  out.proof = proof.str();
  return out;
}

}  // namespace surfbasis
