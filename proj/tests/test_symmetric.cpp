#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "strongsub/digraph.hpp"
#include "strongsub/generators.hpp"
#include "strongsub/oracle.hpp"
#include "strongsub/packing.hpp"
#include "strongsub/symmetric.hpp"

using namespace strongsub;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

UndirectedGraph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return UndirectedGraph(n, edges);
}

UndirectedGraph cycle_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return UndirectedGraph(n, edges);
}

UndirectedGraph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return UndirectedGraph(n, edges);
}

UndirectedGraph petersen() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));  // outer cycle
    edges.emplace_back(i, i + 5);                                           // spoke
    edges.emplace_back(std::min(5 + i, 5 + (i + 2) % 5), std::max(5 + i, 5 + (i + 2) % 5));
  }
  return UndirectedGraph(10, edges);
}

bool connected_after_removal(const UndirectedGraph& g, unsigned removed_mask) {
  const int n = g.order();
  int start = -1, kept = 0;
  for (int v = 0; v < n; ++v) {
    if (!(removed_mask >> v & 1u)) {
      if (start < 0) start = v;
      ++kept;
    }
  }
  if (kept == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!(removed_mask >> w & 1u) && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == kept;
}

// Reference connectivity by trying every removal set, smallest first.
int reference_connectivity(const UndirectedGraph& g) {
  const int n = g.order();
  for (int size = 0; size <= n - 2; ++size) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      if (!connected_after_removal(g, mask)) return size;
    }
  }
  return n - 1;
}

}  // namespace

TEST_CASE("vertex connectivity of named graphs") {
  CHECK(vertex_connectivity(path_graph(4)) == 1);
  CHECK(vertex_connectivity(cycle_graph(5)) == 2);
  CHECK(vertex_connectivity(complete_graph(4)) == 3);
  CHECK(vertex_connectivity(complete_graph(2)) == 1);
  CHECK(vertex_connectivity(UndirectedGraph(4, {{0, 1}, {0, 2}, {0, 3}})) == 1);
  // Complete bipartite on 2 + 3.
  CHECK(vertex_connectivity(UndirectedGraph(
            5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})) == 2);
  CHECK(vertex_connectivity(UndirectedGraph(2, {})) == 0);
  CHECK(kind_of([] { vertex_connectivity(UndirectedGraph(1, {})); }) == "too-small");
}

TEST_CASE("the Petersen graph is three-connected") {
  const UndirectedGraph g = petersen();
  CHECK(vertex_connectivity(g) == 3);
  // Independent of the flow code: no two vertices disconnect it ...
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b) CHECK(connected_after_removal(g, (1u << a) | (1u << b)));
  // ... while a vertex's three neighbors do.
  unsigned neighborhood = 0;
  for (Vertex w : g.neighbors(0)) neighborhood |= 1u << w;
  CHECK_FALSE(connected_after_removal(g, neighborhood));
}

TEST_CASE("flow connectivity agrees with removal-set search on random graphs") {
  Rng rng(660613);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + trial % 4;
    const UndirectedGraph g = random_connected_graph(rng, n, 0.5);
    CAPTURE(trial);
    CHECK(vertex_connectivity(g) == reference_connectivity(g));
  }
}

TEST_CASE("pair connectivity of a biorientation matches the underlying graph") {
  for (const UndirectedGraph& g :
       {cycle_graph(6), complete_graph(5), petersen(), path_graph(5)}) {
    const KappaResult r = kappa2_symmetric(g);
    CHECK(r.value == vertex_connectivity(g));
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->size() == r.value);
    CHECK(verify_packing(*r.certificate));
    REQUIRE(r.witness_set.has_value());
    CHECK(r.witness_set->size() == 2);
  }
}

TEST_CASE("disconnected graphs need the relaxed mode") {
  const UndirectedGraph g(4, {{0, 1}, {2, 3}});
  CHECK(kind_of([&] { kappa2_symmetric(g); }) == "not-connected");
  const KappaResult r = kappa2_symmetric(g, /*relaxed=*/true);
  CHECK(r.value == 0);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->size() == 0);
  REQUIRE(r.witness_set.has_value());
}

TEST_CASE("skeleton menu for a pair anchor") {
  const auto skeletons = enumerate_skeletons(complete_graph(5), {0, 1});
  REQUIRE(skeletons.size() == 2);
  CHECK(skeletons[0].edges.empty());
  CHECK(skeletons[1].edges == std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
}

TEST_CASE("skeleton menu for a triple anchor") {
  // One empty skeleton, three single edges, three two-edge paths, and one
  // star per non-anchor vertex.
  const auto skeletons = enumerate_skeletons(complete_graph(5), {0, 1, 2});
  CHECK(skeletons.size() == 9);
  int stars = 0;
  for (const Skeleton& sk : skeletons) {
    if (sk.edges.size() == 3) {
      ++stars;
      const auto vs = sk.vertices();
      CHECK(vs.size() == 4);
    }
  }
  CHECK(stars == 2);
}

TEST_CASE("skeletons obey the structural rules") {
  const VertexSet s{0, 1, 2, 3};
  const auto skeletons = enumerate_skeletons(complete_graph(6), s);
  bool saw_empty = false, saw_matching = false, saw_double_star = false;
  for (const Skeleton& sk : skeletons) {
    if (sk.edges.empty()) saw_empty = true;
    if (sk.edges == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}}) saw_matching = true;
    std::map<Vertex, int> degree;
    for (const auto& [a, b] : sk.edges) {
      ++degree[a];
      ++degree[b];
    }
    int branch = 0;
    for (const auto& [v, deg] : degree) {
      if (!s.contains(v)) {
        CHECK(deg >= 3);
        ++branch;
      }
    }
    CHECK(branch <= 2);
    if (branch == 2) saw_double_star = true;
    // Acyclic: a forest has fewer edges than vertices in every component;
    // globally, edges < touched vertices.
    const bool forest_sized = sk.edges.empty() || sk.edges.size() < sk.vertices().size();
    CHECK(forest_sized);
  }
  CHECK(saw_empty);
  CHECK(saw_matching);
  CHECK(saw_double_star);
  CHECK(kind_of([] { enumerate_skeletons(complete_graph(7), {0, 1, 2, 3, 4}); }) == "size-guard");
}

TEST_CASE("forest packings around an independent anchor") {
  const UndirectedGraph square = cycle_graph(4);
  const VertexSet s{0, 2};
  ArcPartition two_cells;
  two_cells.cells = {{}, {}};
  const auto plan = acceptable_forest_packing(square, s, two_cells);
  REQUIRE(plan.has_value());
  REQUIRE(plan->forests.size() == 2);
  std::set<std::pair<Vertex, Vertex>> all;
  for (const auto& forest : plan->forests) {
    // Each side path carries one forest.
    CHECK(forest.size() == 2);
    for (const auto& e : forest) CHECK(all.insert(e).second);
  }

  ArcPartition three_cells;
  three_cells.cells = {{}, {}, {}};
  CHECK_FALSE(acceptable_forest_packing(square, s, three_cells).has_value());

  CHECK(kind_of([&] { acceptable_forest_packing(square, {0, 1}, two_cells); }) == "invalid-s");
  ArcPartition foreign;
  foreign.cells = {{{0, 1}}};
  CHECK(kind_of([&] { acceptable_forest_packing(square, s, foreign); }) == "invalid-partition");
}

TEST_CASE("pair anchors in bioriented hosts") {
  const Digraph square = biorient(cycle_graph(4));
  const auto two = decide_kappa_s_symmetric(square, {0, 2}, 2);
  REQUIRE(two.has_value());
  CHECK(two->size() == 2);
  CHECK(verify_packing(*two));
  CHECK_FALSE(decide_kappa_s_symmetric(square, {0, 2}, 3).has_value());

  const Digraph path = biorient(path_graph(3));
  CHECK(decide_kappa_s_symmetric(path, {0, 2}, 1).has_value());
  CHECK_FALSE(decide_kappa_s_symmetric(path, {0, 2}, 2).has_value());
}

TEST_CASE("anchor digons are split across the parts") {
  // All three anchor pairs are adjacent, so the six anchor arcs must be
  // divided among the three parts.
  const Digraph d = biorient(complete_graph(4));
  const auto three = decide_kappa_s_symmetric(d, {0, 1, 2}, 3);
  REQUIRE(three.has_value());
  CHECK(three->size() == 3);
  CHECK(verify_packing(*three));
  CHECK_FALSE(decide_kappa_s_symmetric(d, {0, 1, 2}, 4).has_value());
}

TEST_CASE("host validation") {
  const Digraph asym(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(kind_of([&] { decide_kappa_s_symmetric(asym, {0, 1}, 1); }) == "not-symmetric");
  const Digraph square = biorient(cycle_graph(4));
  CHECK(kind_of([&] { decide_kappa_s_symmetric(square, {0}, 1); }) == "invalid-s");
  CHECK(kind_of([&] { decide_kappa_s_symmetric(square, {0, 2}, -1); }) == "invalid-ell");
}

TEST_CASE("the decision agrees with the exhaustive search on random hosts") {
  Rng rng(88422);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 4 + trial % 2;
    const Digraph d = random_strong_symmetric(rng, n, 0.5);
    CAPTURE(trial);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const VertexSet s{a, b};
        for (int ell = 1; ell <= 2; ++ell) {
          const auto fast = decide_kappa_s_symmetric(d, s, ell);
          const auto slow = decide_kappa_s_at_least(d, s, ell);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(ell);
          CHECK(fast.has_value() == slow.has_value());
          if (fast) CHECK(verify_packing(*fast));
        }
      }
    }
    const VertexSet triple{0, 1, 2};
    const auto fast = decide_kappa_s_symmetric(d, triple, 1);
    const auto slow = decide_kappa_s_at_least(d, triple, 1);
    CHECK(fast.has_value() == slow.has_value());
  }
}
