#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <string>

#include "strongsub/digraph.hpp"

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

Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, arcs);
}

}  // namespace

TEST_CASE("vertex sets normalize to sorted unique members") {
  const VertexSet s({3, 1, 3, 0, 1});
  CHECK(s.members() == std::vector<Vertex>{0, 1, 3});
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(VertexSet{} == VertexSet(std::vector<Vertex>{}));
  CHECK(VertexSet{0, 1} == VertexSet{1, 0});
}

TEST_CASE("digraph construction sorts arcs and indexes them") {
  const Digraph d(4, {{2, 1}, {0, 3}, {0, 1}});
  CHECK(d.order() == 4);
  CHECK(d.arc_count() == 3);
  CHECK(d.arcs() == std::vector<Arc>{{0, 1}, {0, 3}, {2, 1}});
  CHECK(d.arc_index(0, 3) == 1);
  CHECK(d.arc_index(3, 0) == -1);
  CHECK(d.has_arc(2, 1));
  CHECK_FALSE(d.has_arc(1, 2));
  CHECK(d.out(0) == std::vector<Vertex>{1, 3});
  CHECK(d.in(1) == std::vector<Vertex>{0, 2});
  CHECK(d.out_degree(0) == 2);
  CHECK(d.in_degree(3) == 1);
  CHECK(d.out_degree(3) == 0);
}

TEST_CASE("digraph construction rejects malformed input") {
  CHECK(kind_of([] { Digraph(2, {{0, 0}}); }) == "self-loop");
  CHECK(kind_of([] { Digraph(2, {{0, 1}, {0, 1}}); }) == "parallel-arc");
  CHECK(kind_of([] { Digraph(2, {{0, 2}}); }) == "vertex-range");
  CHECK(kind_of([] { Digraph(2, {{0, 1}}, {"a"}); }) == "label-size");
  CHECK(kind_of([] { Digraph(-1, {}); }) == "vertex-range");
}

TEST_CASE("undirected graphs normalize edges and reject loops") {
  const UndirectedGraph g(4, {{3, 1}, {0, 2}});
  CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 3}});
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.neighbors(0) == std::vector<Vertex>{2});
  CHECK(kind_of([] { UndirectedGraph(3, {{1, 1}}); }) == "self-loop");
  CHECK(kind_of([] { UndirectedGraph(3, {{0, 1}, {1, 0}}); }) == "parallel-edge");
}

TEST_CASE("strong components come sources first") {
  SUBCASE("chain") {
    const Digraph d(3, {{0, 1}, {1, 2}});
    const auto comps = strong_components(d);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet{0});
    CHECK(comps[1] == VertexSet{1});
    CHECK(comps[2] == VertexSet{2});
  }
  SUBCASE("two-cycle feeding a sink") {
    const Digraph d(3, {{0, 1}, {1, 0}, {1, 2}});
    const auto comps = strong_components(d);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1});
    CHECK(comps[1] == VertexSet{2});
  }
  SUBCASE("every arc of the condensation points forward") {
    const Digraph d(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 3}, {5, 4}, {5, 6}, {6, 5}});
    const auto comps = strong_components(d);
    std::vector<int> comp_of(d.order(), -1);
    for (size_t i = 0; i < comps.size(); ++i)
      for (Vertex v : comps[i]) comp_of[v] = static_cast<int>(i);
    for (const Arc& a : d.arcs()) CHECK(comp_of[a.from] <= comp_of[a.to]);
  }
}

TEST_CASE("strongness") {
  CHECK(is_strong(Digraph(1, {})));
  CHECK_FALSE(is_strong(Digraph(0, {})));
  CHECK(is_strong(directed_cycle(5)));
  CHECK_FALSE(is_strong(Digraph(3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(is_strong(Digraph(2, {{0, 1}})));

  const Digraph d(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}});
  CHECK(is_strong_subset(d, {0, 1}));
  CHECK(is_strong_subset(d, {2, 3}));
  CHECK_FALSE(is_strong_subset(d, {1, 2}));
  CHECK(is_strong_subset(d, {0}));
}

TEST_CASE("biorientation and the underlying graph invert each other") {
  const UndirectedGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  const Digraph d = biorient(g);
  CHECK(d.arc_count() == 2 * g.edge_count());
  CHECK(is_symmetric(d));
  CHECK(underlying_graph(d) == g);

  const Digraph mixed(3, {{0, 1}, {1, 2}, {2, 1}});
  CHECK_FALSE(is_symmetric(mixed));
  CHECK(underlying_graph(mixed) == UndirectedGraph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("semicomplete and complete-biorientation predicates") {
  const Digraph tournament(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(is_semicomplete(tournament));
  CHECK_FALSE(is_complete_biorientation(tournament));

  const Digraph with_digon(3, {{0, 1}, {1, 0}, {1, 2}, {0, 2}});
  CHECK(is_semicomplete(with_digon));

  const Digraph missing_pair(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK_FALSE(is_semicomplete(missing_pair));

  const Digraph full = biorient(UndirectedGraph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(is_complete_biorientation(full));
  CHECK(is_semicomplete(full));
  CHECK(is_symmetric(full));
  CHECK_FALSE(is_complete_biorientation(biorient(UndirectedGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}))));
  CHECK(is_complete_biorientation(Digraph(1, {})));
}

TEST_CASE("arc subdivision rewires through a fresh labeled vertex") {
  const Digraph d(2, {{0, 1}, {1, 0}}, {"a", "b"});
  const Digraph sub = subdivide_arc(d, 0, 1);
  CHECK(sub.order() == 3);
  CHECK_FALSE(sub.has_arc(0, 1));
  CHECK(sub.has_arc(0, 2));
  CHECK(sub.has_arc(2, 1));
  CHECK(sub.has_arc(1, 0));
  CHECK(sub.label(2) == "sub(a>b)");
  CHECK(kind_of([&] { subdivide_arc(sub, 0, 1); }) == "arc-absent");
}

TEST_CASE("induced subdigraphs keep original vertex ids") {
  const Digraph d(5, {{0, 1}, {1, 4}, {4, 0}, {2, 3}, {4, 2}});
  const Subdigraph sd = induced_subdigraph(d, VertexSet{0, 1, 4});
  CHECK(sd.vertices == VertexSet{0, 1, 4});
  CHECK(sd.arcs == std::vector<Arc>{{0, 1}, {1, 4}, {4, 0}});
  CHECK(kind_of([&] { induced_subdigraph(d, VertexSet{5}); }) == "invalid-vertex-set");
}

TEST_CASE("minimum degrees") {
  const Digraph d(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}});
  const auto [dout, din] = min_degrees(d);
  CHECK(dout == 1);
  CHECK(din == 1);
  CHECK(kind_of([] { min_degrees(Digraph(0, {})); }) == "empty-digraph");
}
