#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "strongsub/digraph.hpp"
#include "strongsub/generators.hpp"
#include "strongsub/oracle.hpp"
#include "strongsub/packing.hpp"
#include "strongsub/semicomplete.hpp"

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

Digraph complete_biorientation(int n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  return Digraph(n, arcs);
}

}  // namespace

TEST_CASE("the split digraph keeps seeds apart and cells in place") {
  const Digraph d = complete_biorientation(3);
  const VertexSet s{0, 1};
  ArcPartition cells;
  cells.cells = {{{0, 1}}, {{1, 0}}};
  const SplitDigraph split = build_split(d, s, cells);

  CHECK(split.graph.order() == 1 + 2 * 2);  // one outside vertex, two copies each
  REQUIRE(split.seeds.size() == 2);
  for (const auto& seed : split.seeds) REQUIRE(seed.size() == 2);

  // Copies stand for the anchor vertices in anchor order.
  for (int cell = 0; cell < 2; ++cell)
    for (int j = 0; j < 2; ++j) CHECK(split.original[split.seeds[cell][j]] == s.members()[j]);

  // No arc joins copies of different seeds.
  for (const Arc& a : split.graph.arcs()) {
    const auto cell_of = [&](Vertex v) {
      for (int c = 0; c < 2; ++c)
        for (Vertex copy : split.seeds[c])
          if (copy == v) return c;
      return -1;
    };
    const int ca = cell_of(a.from), cb = cell_of(a.to);
    if (ca >= 0 && cb >= 0) CHECK(ca == cb);
  }

  // Melting seed i back onto the anchor recovers the host minus the anchor
  // arcs of the other cells.
  for (int cell = 0; cell < 2; ++cell) {
    std::set<Vertex> other_copies;
    for (int c = 0; c < 2; ++c)
      if (c != cell) other_copies.insert(split.seeds[c].begin(), split.seeds[c].end());
    std::set<Arc> melted;
    for (const Arc& a : split.graph.arcs()) {
      if (other_copies.count(a.from) || other_copies.count(a.to)) continue;
      melted.insert({split.original[a.from], split.original[a.to]});
    }
    std::set<Arc> expected;
    for (const Arc& a : d.arcs())
      if (!(s.contains(a.from) && s.contains(a.to))) expected.insert(a);
    for (const Arc& a : cells.cells[cell]) expected.insert(a);
    CHECK(melted == expected);
  }
}

TEST_CASE("split rejects partitions that do not cover the anchor arcs") {
  const Digraph d = complete_biorientation(3);
  const VertexSet s{0, 1};
  ArcPartition missing;
  missing.cells = {{{0, 1}}, {}};
  CHECK(kind_of([&] { build_split(d, s, missing); }) == "invalid-partition");
  ArcPartition duplicated;
  duplicated.cells = {{{0, 1}}, {{0, 1}, {1, 0}}};
  CHECK(kind_of([&] { build_split(d, s, duplicated); }) == "invalid-partition");
  ArcPartition foreign;
  foreign.cells = {{{0, 1}}, {{1, 0}, {0, 2}}};
  CHECK(kind_of([&] { build_split(d, s, foreign); }) == "invalid-partition");
}

TEST_CASE("seed extension leaves already-strong seeds untouched") {
  const ExtensionInstance instance{complete_biorientation(4), {VertexSet{0}, VertexSet{1}}};
  const auto grown = strong_extension_packing(instance);
  REQUIRE(grown.has_value());
  CHECK((*grown)[0] == VertexSet{0});
  CHECK((*grown)[1] == VertexSet{1});
}

TEST_CASE("seed extension routes a broken seed through a free vertex") {
  // Seed {0,1} has the arc 0>1 only; the way back runs through 2.
  const Digraph host(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto grown = strong_extension_packing({host, {VertexSet{0, 1}}});
  REQUIRE(grown.has_value());
  CHECK((*grown)[0] == VertexSet{0, 1, 2});
}

TEST_CASE("a seed with two sources grows helpers for both") {
  // Inside the seed {0,1,2} both 0 and 1 are sources and 2 is the sink;
  // vertex 3 feeds the sources and drains the sink, vertex 4 is a bystander.
  const Digraph host(5, {{0, 2}, {1, 2}, {2, 3}, {3, 0}, {3, 1}, {3, 4}, {0, 4}, {1, 4}, {2, 4}});
  const auto grown = strong_extension_packing({host, {VertexSet{0, 1, 2}}});
  REQUIRE(grown.has_value());
  CHECK((*grown)[0] == VertexSet{0, 1, 2, 3});
}

TEST_CASE("two broken seeds cannot share the only repair vertex") {
  const std::vector<Arc> base = {{0, 1}, {2, 3}, {1, 4}, {4, 0}, {3, 4}, {4, 2}};
  const Digraph host(5, base);
  const std::vector<VertexSet> seeds = {VertexSet{0, 1}, VertexSet{2, 3}};
  CHECK_FALSE(strong_extension_packing({host, seeds}).has_value());

  // A second repair vertex resolves the contention.
  std::vector<Arc> wider = base;
  for (const Arc& a : {Arc{1, 5}, Arc{5, 0}, Arc{3, 5}, Arc{5, 2}, Arc{4, 5}}) wider.push_back(a);
  const Digraph host6(6, wider);
  const auto grown = strong_extension_packing({host6, seeds});
  REQUIRE(grown.has_value());
  std::set<Vertex> all;
  for (size_t i = 0; i < grown->size(); ++i) {
    const VertexSet& z = (*grown)[i];
    for (Vertex v : seeds[i]) CHECK(z.contains(v));
    CHECK(is_strong_subset(host6, z.members()));
    for (Vertex v : z) CHECK(all.insert(v).second);
  }
}

TEST_CASE("seed extension validates its input") {
  const Digraph host = complete_biorientation(3);
  CHECK(kind_of([&] { strong_extension_packing({host, {VertexSet{}}}); }) == "invalid-seed");
  CHECK(kind_of([&] { strong_extension_packing({host, {VertexSet{0, 1}, VertexSet{1}}}); }) ==
        "invalid-seed");
  // 0 and 2 are not adjacent, and neither sits in the seed.
  const Digraph sparse(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK(kind_of([&] { strong_extension_packing({sparse, {VertexSet{1}}}); }) ==
        "hypothesis-violation");
  // With no seeds at all there is nothing to grow.
  const auto none = strong_extension_packing({sparse, {}});
  REQUIRE(none.has_value());
  CHECK(none->empty());
}

TEST_CASE("pair anchors in small semicomplete hosts") {
  SUBCASE("triangle biorientation") {
    const Digraph d = complete_biorientation(3);
    const auto two = decide_kappa_s_semicomplete(d, {0, 1}, 2);
    REQUIRE(two.has_value());
    CHECK(two->size() == 2);
    CHECK(verify_packing(*two));
    CHECK_FALSE(decide_kappa_s_semicomplete(d, {0, 1}, 3).has_value());
  }
  SUBCASE("directed triangle") {
    const Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(decide_kappa_s_semicomplete(d, {0, 1}, 1).has_value());
    CHECK_FALSE(decide_kappa_s_semicomplete(d, {0, 1}, 2).has_value());
  }
  SUBCASE("complete biorientation on four vertices splits its anchor digon") {
    const Digraph d = complete_biorientation(4);
    const auto three = decide_kappa_s_semicomplete(d, {0, 1}, 3);
    REQUIRE(three.has_value());
    CHECK(three->size() == 3);
    CHECK(verify_packing(*three));
    CHECK_FALSE(decide_kappa_s_semicomplete(d, {0, 1}, 4).has_value());
  }
}

TEST_CASE("zero parts always pack") {
  const Digraph d(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto p = decide_kappa_s_semicomplete(d, {0, 1}, 0);
  REQUIRE(p.has_value());
  CHECK(p->size() == 0);
}

TEST_CASE("host validation") {
  const Digraph path(3, {{0, 1}, {1, 2}});
  CHECK(kind_of([&] { decide_kappa_s_semicomplete(path, {0, 1}, 1); }) == "not-semicomplete");
  const Digraph d = complete_biorientation(3);
  CHECK(kind_of([&] { decide_kappa_s_semicomplete(d, {0}, 1); }) == "invalid-s");
  CHECK(kind_of([&] { decide_kappa_s_semicomplete(d, {0, 1}, -1); }) == "invalid-ell");
}

TEST_CASE("the decision agrees with the exhaustive search on random hosts") {
  Rng rng(31007);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 4 + trial % 2;
    const Digraph d = random_strong_semicomplete(rng, n, 0.4);
    CAPTURE(trial);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const VertexSet s{a, b};
        for (int ell = 1; ell <= 2; ++ell) {
          const auto fast = decide_kappa_s_semicomplete(d, s, ell);
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
    const auto fast = decide_kappa_s_semicomplete(d, triple, 1);
    const auto slow = decide_kappa_s_at_least(d, triple, 1);
    CHECK(fast.has_value() == slow.has_value());
  }
}

TEST_CASE("the all-subsets decision reports a failing subset") {
  const Digraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(decide_kappa_k_semicomplete(triangle, 2, 1).holds);
  const SubsetDecision no = decide_kappa_k_semicomplete(triangle, 2, 2);
  CHECK_FALSE(no.holds);
  REQUIRE(no.witness.has_value());
  CHECK_FALSE(decide_kappa_s_semicomplete(triangle, *no.witness, 2).has_value());

  CHECK(decide_kappa_k_semicomplete(complete_biorientation(4), 2, 3).holds);
  CHECK_FALSE(decide_kappa_k_semicomplete(complete_biorientation(4), 2, 4).holds);

  // A tournament with a sink is not strong: no packing, no subset to blame.
  const Digraph sink(3, {{0, 1}, {0, 2}, {1, 2}});
  const SubsetDecision broken = decide_kappa_k_semicomplete(sink, 2, 1);
  CHECK_FALSE(broken.holds);
  CHECK_FALSE(broken.witness.has_value());
}
