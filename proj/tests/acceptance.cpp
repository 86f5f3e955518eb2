// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_commands.hpp"
#include "test_support.hpp"

using namespace surfbasis;
using testsupport::fixture;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Cuts met while running criteria 1 and 6, checked in criterion 8.
struct CutRecord {
  std::string label;
  std::vector<std::string> problems;
};
std::vector<CutRecord> g_cuts;

void record_cut(const std::string& label, const EmbeddedGraph& eg, const ThreeBasisResult& r) {
  if (r.cut) g_cuts.push_back({label, check_cut_invariants(eg, r.face_basis.faces, *r.cut)});
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

// cmd_basis auto on each fixture, then the reported basis number.
Outcome surface_fixtures(const std::vector<std::string>& names, int chi, bool record) {
  std::ostringstream detail;
  for (const auto& name : names) {
    Clock clock;
    const auto eg = fixture(name);
    if (euler_characteristic(eg) != chi) return fail(name + ": unexpected chi");
    const auto report = cli::compute_basis(eg, "auto");
    const auto check = verify_basis(eg.graph(), report.basis.elements);
    const int load = testsupport::max_load(report.basis.elements, eg.graph().edge_count());
    if (!check.is_basis) return fail(name + ": not a basis");
    if (check.dimension != betti(eg.graph())) return fail(name + ": wrong dimension");
    if (load > 3) return fail(name + ": sparsity " + std::to_string(load));
    if (report.basis_number.rfind("3 (exact", 0) != 0) return fail(name + ": basis number " + report.basis_number);
    const auto exact = basis_number_exact(eg);
    if (exact.k != 3) return fail(name + ": exact value " + std::to_string(exact.k));
    if (record && chi == 0) record_cut(name, eg, three_basis(eg));
    const double s = clock.seconds();
    if (s >= 1.0) return fail(name + ": took " + std::to_string(s) + " s");
    detail << name << " dim " << check.dimension << " sparsity " << load << "; ";
  }
  detail << "bn = 3 exact for all";
  return {true, detail.str()};
}

Outcome criterion1() { return surface_fixtures({"k5_torus", "k33_torus", "k7_torus", "k5_klein"}, 0, true); }

Outcome criterion2() { return surface_fixtures({"k5_projective", "k6_projective"}, 1, false); }

Outcome criterion3() {
  Clock clock;
  int graphs = 0, planar = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : testsupport::connected_graphs(n)) {
      ++graphs;
      const bool is_pl = is_planar(g).planar;
      const int k = brute_force_basis_number(g, 3).k;
      planar += is_pl ? 1 : 0;
      if ((k <= 2) != is_pl)
        return fail("mismatch on a graph with " + std::to_string(n) + " vertices and " +
                    std::to_string(g.edge_count()) + " edges");
    }
  const double s = clock.seconds();
  if (s >= 300) return fail("took " + std::to_string(s) + " s");
  return {true, std::to_string(graphs) + " labelled connected graphs, " + std::to_string(planar) + " planar, " +
                    std::to_string(s).substr(0, 5) + " s"};
}

Outcome criterion4() {
  std::ostringstream detail;
  for (const auto& [name, graph] : {std::pair{std::string("k5_torus"), testsupport::complete_graph(5)},
                                    std::pair{std::string("k33_torus"), testsupport::complete_bipartite(3, 3)}}) {
    const auto eg = fixture(name);
    if (!(eg.graph() == graph)) return fail(name + " is not the expected graph");
    const int brute = brute_force_basis_number(graph, 4).k;
    const int built = testsupport::max_load(three_basis(eg).basis.elements, graph.edge_count());
    if (brute != 3 || built != brute)
      return fail(name + ": brute force " + std::to_string(brute) + ", construction " + std::to_string(built));
    detail << name << " betti " << betti(graph) << " brute force 3 = construction 3; ";
  }
  return {true, detail.str()};
}

Outcome criterion5() {
  const auto eg = fixture("k6_double_torus");
  const int chi = euler_characteristic(eg);
  const auto b = sparse_basis_general(eg);
  const int load = testsupport::max_load(b.elements, eg.graph().edge_count());
  if (chi != -2) return fail("fixture chi " + std::to_string(chi));
  if (!verify_basis(eg.graph(), b.elements).is_basis) return fail("not a basis");
  if (load > 6) return fail("sparsity " + std::to_string(load));
  return {true, "chi -2, counted sparsity " + std::to_string(load) + " <= 6"};
}

Outcome criterion6() {
  Clock clock;
  int case_counts[3] = {0, 0, 0};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto eg = random_embedding(testsupport::stress_options(seed));
    ThreeBasisResult r;
    try {
      r = three_basis(eg);
    } catch (const Error& e) {
      return fail("seed " + std::to_string(seed) + ": " + std::string(to_string(e.kind())) + ": " + e.what());
    }
    const auto check = verify_basis(eg.graph(), r.basis.elements);
    if (!check.is_basis || testsupport::max_load(r.basis.elements, eg.graph().edge_count()) > 3)
      return fail("seed " + std::to_string(seed) + ": output fails verification");
    ++case_counts[static_cast<int>(r.witness.case_tag)];
    record_cut("seed " + std::to_string(seed), eg, r);
  }
  const double s = clock.seconds();
  if (s >= 120) return fail("took " + std::to_string(s) + " s");
  return {true, "1000 embeddings, disjoint " + std::to_string(case_counts[0]) + ", case 1 " +
                    std::to_string(case_counts[1]) + ", case 2 " + std::to_string(case_counts[2]) + ", " +
                    std::to_string(s).substr(0, 5) + " s"};
}

Outcome criterion7() {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const auto t = testsupport::random_replacement_tuple(rng);
    if (!check_replacement_preconditions(t.x, t.y, t.h, t.k, t.f0)) return fail("generator produced a failing tuple");
    const auto [x2, y2] = apply_replacement(t.x, t.y, t.h, t.k, t.f0);
    if (!(x2 & y2).is_subset_of(t.f0)) return fail("tuple " + std::to_string(i) + ": intersection leaves f0");
    auto before = t.family, after = t.family;
    before.insert(before.end(), {t.x, t.y});
    after.insert(after.end(), {x2, y2});
    if (!testsupport::same_span(t.x.universe(), before, after))
      return fail("tuple " + std::to_string(i) + ": span changed");
  }
  return {true, "10000 tuples, span equal and intersection inside f0"};
}

Outcome criterion8() {
  if (g_cuts.empty()) return fail("no cuts were recorded");
  for (const auto& c : g_cuts)
    if (!c.problems.empty()) return fail(c.label + ": " + c.problems.front());
  return {true, std::to_string(g_cuts.size()) + " cuts, all six invariants exact"};
}

Outcome criterion9() {
  Clock clock;
  const double a = f_eval(1e3), b = f_eval(1e6), c = f_eval(1e9);
  if (!(b >= -1.395 && b <= -1.385)) return fail("f(1e6) = " + std::to_string(b));
  if (!(a > b && b > c && c > f_limit())) return fail("values do not decrease toward the limit");
  const std::int64_t g0 = cli::kDefaultThreshold;
  const double m6 = fit_constant(sample_range(1'000'000, g0), g0);
  const double m9 = fit_constant(sample_range(1'000'000'000, g0), g0);
  if (m9 > m6 * 1.05) return fail("M grows from " + std::to_string(m6) + " to " + std::to_string(m9));
  auto ratio = [&](double g) {
    const double l = std::log2(g);
    return static_cast<double>(recursion_bound(static_cast<std::int64_t>(g), g0).final_bound) / (l * l);
  };
  const double r6 = ratio(1e6), r9 = ratio(1e9);
  if (r9 > r6 * 1.05 || r9 > m9) return fail("bound/log2(g)^2 rises from " + std::to_string(r6) + " to " + std::to_string(r9));
  const double s = clock.seconds();
  if (s >= 1.0) return fail("took " + std::to_string(s) + " s");
  std::ostringstream detail;
  detail.precision(5);
  detail << "f(1e3) " << a << " > f(1e6) " << b << " > f(1e9) " << c << " > " << f_limit() << "; M " << m6
         << " -> " << m9 << "; bound/log2(g)^2 " << r6 << " -> " << r9;
  return {true, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
