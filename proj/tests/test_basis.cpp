#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace surfbasis;
using testsupport::fixture;

namespace {

std::size_t universe_of(const EmbeddedGraph& eg) { return static_cast<std::size_t>(eg.graph().edge_count()); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::NotFound;
}

}  // namespace

TEST(FaceBasis, CubeIsFiveFaces) {
  auto eg = fixture("cube");
  auto fb = face_basis(eg);
  EXPECT_EQ(fb.basis.size(), 5U);
  EXPECT_TRUE(fb.u_edges.empty());
  EXPECT_EQ(fb.chi, 2);
  EXPECT_TRUE(verify_basis(eg.graph(), fb.basis.elements).is_basis);
}

TEST(FaceBasis, K7TorusNeedsTwoFundamentalCycles) {
  auto eg = fixture("k7_torus");
  auto fb = face_basis(eg);
  EXPECT_EQ(fb.u_edges.size(), 2U);
  EXPECT_EQ(fb.basis.size(), 15U);
  for (EdgeId e : fb.u_edges) EXPECT_FALSE(fb.tree.contains(e));
  EXPECT_TRUE(verify_basis(eg.graph(), fb.basis.elements).is_basis);
}

TEST(FaceBasis, K6ProjectiveNeedsOne) {
  auto eg = fixture("k6_projective");
  auto fb = face_basis(eg);
  EXPECT_EQ(fb.u_edges.size(), 1U);
  EXPECT_EQ(fb.basis.size(), 10U);
}

TEST(FaceBasis, SizeIsBettiOnEveryFixture) {
  for (const auto& name : testsupport::all_fixtures()) {
    auto eg = fixture(name);
    auto fb = face_basis(eg);
    EXPECT_EQ(static_cast<int>(fb.basis.size()), betti(eg.graph())) << name;
    EXPECT_EQ(static_cast<int>(fb.u_edges.size()), 2 - fb.chi) << name;
    EXPECT_EQ(testsupport::max_load(fb.basis.elements, eg.graph().edge_count()),
              fb.basis.sparsity(universe_of(eg)))
        << name;
  }
}

TEST(SparseBasisGeneral, BoundFourMinusChi) {
  for (const auto& name : testsupport::all_fixtures()) {
    auto eg = fixture(name);
    auto b = sparse_basis_general(eg);
    const int chi = euler_characteristic(eg);
    EXPECT_LE(testsupport::max_load(b.elements, eg.graph().edge_count()), 4 - chi) << name;
    EXPECT_TRUE(verify_basis(eg.graph(), b.elements).is_basis) << name;
  }
  auto dt = fixture("k6_double_torus");
  EXPECT_LE(testsupport::max_load(sparse_basis_general(dt).elements, dt.graph().edge_count()), 6);
}

TEST(SparseBasisGeneral, RandomEmbeddingsOfAnyGenus) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto eg = detail::random_connected_embedding(rng, 4 + trial % 7, 4 + trial % 7 + 2 + trial % 9, trial % 3 == 0);
    auto b = sparse_basis_general(eg);
    EXPECT_LE(testsupport::max_load(b.elements, eg.graph().edge_count()), 4 - euler_characteristic(eg));
    EXPECT_TRUE(verify_basis(eg.graph(), b.elements).is_basis);
  }
}

TEST(MacLane, PlanarFixturesAreTwoSparse) {
  for (const char* name : {"triangle", "k4_planar", "cube"}) {
    auto eg = fixture(name);
    auto b = maclane_basis(eg);
    EXPECT_LE(testsupport::max_load(b.elements, eg.graph().edge_count()), 2) << name;
    EXPECT_TRUE(verify_basis(eg.graph(), b.elements).is_basis) << name;
  }
  EXPECT_EQ(kind_of([] { (void)maclane_basis(fixture("k5_torus")); }), ErrorKind::WrongChi);
}

TEST(Projective, FacesPlusOneCycle) {
  auto k6 = fixture("k6_projective");
  auto b6 = three_basis_projective(k6);
  EXPECT_EQ(b6.size(), 10U);
  EXPECT_LE(testsupport::max_load(b6.elements, 15), 3);
  EXPECT_TRUE(verify_basis(k6.graph(), b6.elements).is_basis);
  auto k5 = fixture("k5_projective");
  auto b5 = three_basis_projective(k5);
  EXPECT_EQ(b5.size(), 6U);
  EXPECT_LE(testsupport::max_load(b5.elements, 10), 3);
  EXPECT_EQ(kind_of([] { (void)three_basis_projective(fixture("k7_torus")); }), ErrorKind::WrongChi);
}

TEST(Replacement, DisjointPairNeedsNothing) {
  auto x = EdgeVector::from_edges(6, {0, 1});
  auto y = EdgeVector::from_edges(6, {2, 3});
  EdgeVector none(6);
  EXPECT_TRUE(check_replacement_preconditions(x, y, none, none, none));
}

TEST(Replacement, ReportsEachInclusion) {
  auto x = EdgeVector::from_edges(6, {0, 1});
  auto y = EdgeVector::from_edges(6, {1, 2});
  EdgeVector none(6);
  auto c = replacement_inclusions(x, y, none, none, none);
  EXPECT_FALSE(c.holds[0]);
  EXPECT_TRUE(c.holds[1] && c.holds[2] && c.holds[3]);
  EXPECT_TRUE(check_replacement_preconditions(x, y, none, none, EdgeVector::from_edges(6, {1})));
  // h = k on a shared edge cancels it out of both.
  auto h = EdgeVector::from_edges(6, {1, 4});
  EXPECT_TRUE(check_replacement_preconditions(x, y, h, h, EdgeVector::from_edges(6, {4})));
  try {
    (void)apply_replacement(x, y, none, none, none);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
    EXPECT_NE(std::string(e.what()).find("x∩y"), std::string::npos);
  }
}

TEST(Replacement, ApplyAddsAndChecksSpan) {
  auto x = EdgeVector::from_edges(5, {0, 1, 2});
  auto y = EdgeVector::from_edges(5, {2, 3});
  auto h = EdgeVector::from_edges(5, {2, 4});
  auto k = EdgeVector(5);
  auto f0 = EdgeVector::from_edges(5, {4});
  ASSERT_TRUE(check_replacement_preconditions(x, y, h, k, f0));
  auto [x2, y2] = apply_replacement(x, y, h, k, f0);
  EXPECT_EQ(x2, x ^ h);
  EXPECT_EQ(y2, y);
  EXPECT_TRUE((x2 & y2).is_subset_of(f0));
  GaussianBasis span(5);
  span.insert_if_independent(EdgeVector::from_edges(5, {0}));
  EXPECT_EQ(kind_of([&] { (void)apply_replacement(x, y, h, k, f0, &span); }), ErrorKind::PreconditionFailed);
  span.insert_if_independent(h);
  EXPECT_NO_THROW((void)apply_replacement(x, y, h, k, f0, &span));
}

TEST(Replacement, RandomTuplesKeepSpanAndMeetInsideF0) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 3000; ++i) {
    auto t = testsupport::random_replacement_tuple(rng);
    ASSERT_TRUE(check_replacement_preconditions(t.x, t.y, t.h, t.k, t.f0));
    auto [x2, y2] = apply_replacement(t.x, t.y, t.h, t.k, t.f0);
    EXPECT_TRUE((x2 & y2).is_subset_of(t.f0)) << i;
    auto before = t.family, after = t.family;
    before.insert(before.end(), {t.x, t.y});
    after.insert(after.end(), {x2, y2});
    EXPECT_TRUE(testsupport::same_span(t.x.universe(), before, after)) << i;
  }
}

TEST(Replacement, FailingTupleCanMeetOutsideF0) {
  // Without the inclusions the conclusion is not guaranteed: an edge shared
  // by x and y that nothing removes stays in the intersection.
  std::mt19937_64 rng(8);
  int rejected = 0, escaped = 0;
  for (int i = 0; i < 2000; ++i) {
    auto x = testsupport::random_vector(rng, 12, 40), y = testsupport::random_vector(rng, 12, 40);
    auto h = testsupport::random_vector(rng, 12, 30), k = testsupport::random_vector(rng, 12, 30);
    auto f0 = testsupport::random_vector(rng, 12, 20);
    if (check_replacement_preconditions(x, y, h, k, f0)) continue;
    ++rejected;
    if (!((x ^ h) & (y ^ k)).is_subset_of(f0)) ++escaped;
  }
  EXPECT_GT(rejected, 0);
  EXPECT_GT(escaped, 0);
}

TEST(VerifyBasis, DetectsEachFailure) {
  auto eg = fixture("k4_planar");
  const auto& g = eg.graph();
  auto b = maclane_basis(eg).elements;
  auto ok = verify_basis(g, b);
  EXPECT_TRUE(ok.is_basis);
  EXPECT_EQ(ok.betti, 3);
  EXPECT_EQ(ok.sparsity, 2);

  auto missing = b;
  missing.pop_back();
  EXPECT_FALSE(verify_basis(g, missing).is_basis);

  auto dependent = b;
  dependent.back() = b[0] ^ b[1];
  auto d = verify_basis(g, dependent);
  EXPECT_FALSE(d.is_basis);
  EXPECT_EQ(d.rank, 2);

  auto odd = b;
  odd[0] = EdgeVector::from_edges(6, {0});
  EXPECT_FALSE(verify_basis(g, odd).all_even);

  EXPECT_EQ(kind_of([&] { (void)verify_basis(g, {EdgeVector(5)}); }), ErrorKind::UniverseMismatch);
}

TEST(BasisLabel, RoundTrip) {
  for (BasisLabel l : {BasisLabel{BasisLabel::Kind::Face, 3}, BasisLabel{BasisLabel::Kind::Fundamental, 17},
                       BasisLabel{BasisLabel::Kind::ModifiedX, 0}, BasisLabel{BasisLabel::Kind::ModifiedY, 0},
                       BasisLabel{BasisLabel::Kind::Cycle, 2}})
    EXPECT_EQ(BasisLabel::parse(l.str()), l);
  EXPECT_EQ(kind_of([] { (void)BasisLabel::parse("edge 4"); }), ErrorKind::ParseError);
}
