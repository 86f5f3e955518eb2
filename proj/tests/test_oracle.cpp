#include <gtest/gtest.h>

#include <map>
#include <random>

#include "test_support.hpp"

using namespace surfbasis;
using testsupport::complete_bipartite;
using testsupport::complete_graph;
using testsupport::fixture;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::NotFound;
}

// Degree profile of the certificate subgraph: branch vertices and the
// number of degree-2 subdivision vertices.
std::map<int, int> degree_histogram(const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  std::map<int, int> h;
  for (int d : deg)
    if (d > 0) ++h[d];
  return h;
}

void expect_valid_certificate(const Multigraph& g, const PlanarityResult& p, const std::string& label) {
  if (p.planar) {
    ASSERT_TRUE(p.embedding.has_value()) << label;
    EXPECT_TRUE(validate_structure(*p.embedding).empty()) << label;
    if (testsupport::components(g) == 1) {
      EXPECT_EQ(g.vertex_count() - g.edge_count() + testsupport::faces_via_double_cover(*p.embedding), 2) << label;
    }
    return;
  }
  auto h = degree_histogram(g, p.kuratowski);
  if (p.kind == KuratowskiKind::K5) {
    EXPECT_EQ(h[4], 5) << label;
    EXPECT_EQ(h.size(), h.count(2) ? 2U : 1U) << label;
  } else {
    ASSERT_EQ(p.kind, KuratowskiKind::K33) << label;
    EXPECT_EQ(h[3], 6) << label;
    EXPECT_EQ(h.size(), h.count(2) ? 2U : 1U) << label;
  }
}

}  // namespace

TEST(BruteForce, SmallExamples) {
  EXPECT_EQ(brute_force_basis_number(Multigraph(3, {{0, 1}, {0, 2}, {1, 2}}), 3).k, 1);
  EXPECT_EQ(brute_force_basis_number(complete_graph(4), 3).k, 2);
  EXPECT_EQ(brute_force_basis_number(complete_graph(5), 3).k, 3);
  EXPECT_EQ(brute_force_basis_number(complete_bipartite(3, 3), 3).k, 3);
  EXPECT_EQ(brute_force_basis_number(Multigraph(2, {{0, 1}}), 3).k, 0);
  // Three parallel edges: a theta, so two elements must share an edge.
  EXPECT_EQ(brute_force_basis_number(Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}), 3).k, 2);
}

TEST(BruteForce, WitnessIsAVerifiedBasis) {
  for (const auto& g : {complete_graph(4), complete_graph(5), complete_bipartite(3, 3), complete_bipartite(2, 4)}) {
    auto r = brute_force_basis_number(g, 3);
    auto c = verify_basis(g, r.basis.elements);
    EXPECT_TRUE(c.is_basis);
    EXPECT_EQ(testsupport::max_load(r.basis.elements, g.edge_count()), r.k);
  }
}

TEST(BruteForce, Errors) {
  EXPECT_EQ(kind_of([] { (void)brute_force_basis_number(complete_graph(5), 0); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { (void)brute_force_basis_number(complete_graph(5), 2); }), ErrorKind::NotFound);
  EXPECT_EQ(kind_of([] { (void)brute_force_basis_number(complete_graph(6), 3); }), ErrorKind::TooLarge);
  EXPECT_EQ(kind_of([] { (void)brute_force_basis_number(Multigraph(3, {{0, 1}}), 3); }),
            ErrorKind::DisconnectedGraph);
}

TEST(BruteForce, AtMostFaceBasisSparsity) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    auto eg = detail::random_connected_embedding(rng, 4 + trial % 3, 6 + trial % 4, true);
    if (betti(eg.graph()) > kMaxBruteForceBetti) continue;
    auto fb = face_basis(eg);
    const int upper = fb.basis.sparsity(static_cast<std::size_t>(eg.graph().edge_count()));
    EXPECT_LE(brute_force_basis_number(eg.graph(), std::max(upper, 1)).k, upper);
  }
}

TEST(Planarity, Examples) {
  EXPECT_TRUE(is_planar(complete_graph(4)).planar);
  auto k5 = is_planar(complete_graph(5));
  EXPECT_FALSE(k5.planar);
  EXPECT_EQ(k5.kind, KuratowskiKind::K5);
  EXPECT_EQ(k5.kuratowski.size(), 10U);
  auto k33 = is_planar(complete_bipartite(3, 3));
  EXPECT_FALSE(k33.planar);
  EXPECT_EQ(k33.kind, KuratowskiKind::K33);
  EXPECT_EQ(k33.kuratowski.size(), 9U);
  EXPECT_EQ(kind_of([] { (void)is_planar(Multigraph(kMaxPlanarityVertices + 1, {})); }), ErrorKind::TooLarge);
}

TEST(Planarity, CertificatesOnFixtures) {
  for (const auto& name : testsupport::all_fixtures()) {
    const auto eg = fixture(name);
    const auto& g = eg.graph();
    auto p = is_planar(g);
    EXPECT_EQ(p.planar, euler_characteristic(eg) == 2) << name;
    expect_valid_certificate(g, p, name);
  }
}

TEST(Planarity, ParallelEdgesStayPlanar) {
  Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}, {1, 2}, {0, 1}});
  auto p = is_planar(g);
  ASSERT_TRUE(p.planar);
  expect_valid_certificate(g, p, "multi");
}

TEST(Planarity, SubdividedK33) {
  // K3,3 with edge 0-3 replaced by 0-6-3.
  Multigraph g(7, {{0, 6}, {6, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}});
  auto p = is_planar(g);
  ASSERT_FALSE(p.planar);
  expect_valid_certificate(g, p, "subdivided");
}

TEST(Planarity, RandomGraphsHaveValidCertificates) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 5 + trial % 8;
    auto eg = detail::random_connected_embedding(rng, n, n + 3 + trial % 12, true);
    expect_valid_certificate(eg.graph(), is_planar(eg.graph()), "trial " + std::to_string(trial));
  }
}

TEST(Classify, RejectsNonSubdivisions) {
  auto k4 = complete_graph(4);
  std::vector<EdgeId> all{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(classify_kuratowski(k4, all), KuratowskiKind::None);
  auto k5 = complete_graph(5);
  std::vector<EdgeId> most{0, 1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_EQ(classify_kuratowski(k5, most), KuratowskiKind::None);
}

TEST(MacLane, AllConnectedGraphsUpToFourVertices) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : testsupport::connected_graphs(n)) {
      EXPECT_TRUE(is_planar(g).planar);
      EXPECT_LE(brute_force_basis_number(g, 3).k, 2);
    }
}

TEST(MacLane, FiveVertexGraphsAroundK5) {
  // K5 and every K5 minus one edge.
  auto k5 = complete_graph(5);
  EXPECT_EQ(brute_force_basis_number(k5, 3).k, 3);
  for (EdgeId drop = 0; drop < 10; ++drop) {
    std::vector<Edge> e;
    for (EdgeId i = 0; i < 10; ++i)
      if (i != drop) e.push_back(k5.edge(i));
    Multigraph g(5, e);
    EXPECT_TRUE(is_planar(g).planar);
    EXPECT_EQ(brute_force_basis_number(g, 3).k, 2);
  }
}

TEST(Cactus, MatchesBruteForceOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : testsupport::connected_graphs(n)) {
      if (betti(g) > 5) continue;
      const int k = brute_force_basis_number(g, 3).k;
      EXPECT_EQ(is_cactus(g), k <= 1);
    }
}

TEST(Exact, FixturesWithChiZeroOrOne) {
  for (const char* name : {"k5_torus", "k33_torus", "k7_torus", "k5_klein", "k5_klein_cut", "torus_grid_3x5",
                           "k5_projective", "k6_projective"}) {
    auto eg = fixture(name);
    auto r = basis_number_exact(eg);
    EXPECT_EQ(r.k, 3) << name;
    EXPECT_FALSE(r.planarity.planar) << name;
    EXPECT_EQ(testsupport::max_load(r.basis.elements, eg.graph().edge_count()), 3) << name;
    EXPECT_TRUE(verify_basis(eg.graph(), r.basis.elements).is_basis) << name;
    EXPECT_FALSE(r.proof.empty()) << name;
  }
  EXPECT_EQ(kind_of([] { (void)basis_number_exact(fixture("cube")); }), ErrorKind::WrongChi);
}

TEST(Exact, AgreesWithBruteForceOnToroidalK5AndK33) {
  for (const char* name : {"k5_torus", "k33_torus", "k5_klein"}) {
    auto eg = fixture(name);
    EXPECT_EQ(basis_number_exact(eg).k, brute_force_basis_number(eg.graph(), 3).k) << name;
    EXPECT_EQ(three_basis(eg).basis.sparsity(static_cast<std::size_t>(eg.graph().edge_count())),
              brute_force_basis_number(eg.graph(), 3).k)
        << name;
  }
}

TEST(Exact, PlanarGraphsOnTheTorus) {
  // Planar graphs embedded with chi 0 get their value from the planar route.
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 300 && seen < 20; ++seed) {
    auto eg = random_embedding(testsupport::stress_options(seed));
    if (betti(eg.graph()) > 6) continue;
    auto r = basis_number_exact(eg);
    EXPECT_EQ(r.k, brute_force_basis_number(eg.graph(), 3).k) << seed;
    ++seen;
  }
  EXPECT_GT(seen, 0);
}
