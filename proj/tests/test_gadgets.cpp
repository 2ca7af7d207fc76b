#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>
#include <string>

#include "strongsub/digraph.hpp"
#include "strongsub/gadgets.hpp"
#include "strongsub/linkage.hpp"
#include "strongsub/oracle.hpp"

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

// Two disjoint corridors: 0 > 4 > 1 and 2 > 5 > 3.
Linkage2Instance routable() {
  Linkage2Instance inst;
  inst.host = Digraph(6, {{0, 4}, {4, 1}, {2, 5}, {5, 3}});
  inst.s1 = 0;
  inst.t1 = 1;
  inst.s2 = 2;
  inst.t2 = 3;
  return inst;
}

// Both corridors squeeze through vertex 4.
Linkage2Instance blocked() {
  Linkage2Instance inst;
  inst.host = Digraph(5, {{0, 4}, {4, 1}, {2, 4}, {4, 3}});
  inst.s1 = 0;
  inst.t1 = 1;
  inst.s2 = 2;
  inst.t2 = 3;
  return inst;
}

}  // namespace

TEST_CASE("pair-hub wiring for the smallest parameters") {
  const Linkage2Instance inst = routable();
  const Gadget g = linkage_gadget(inst, 2, 2);
  const Vertex x = 6, y = 7;
  CHECK(g.graph.order() == 8);
  CHECK(g.anchor == VertexSet{x, y});
  CHECK(g.ell == 2);
  CHECK(g.graph.label(x) == "x");
  CHECK(g.graph.label(y) == "y");
  CHECK(g.graph.label(0) == "v0");

  for (const Arc& a : {Arc{inst.t1, x}, Arc{x, inst.s1}, Arc{inst.t2, y}, Arc{y, inst.s2},
                       Arc{x, inst.s2}, Arc{inst.s2, x}, Arc{y, inst.t1}, Arc{inst.t1, y}})
    CHECK(g.graph.has_arc(a.from, a.to));

  // The hubs see exactly two arcs in and two out.
  CHECK(g.graph.in_degree(x) == 2);
  CHECK(g.graph.out_degree(x) == 2);
  CHECK(g.graph.in_degree(y) == 2);
  CHECK(g.graph.out_degree(y) == 2);
}

TEST_CASE("widening the hub raises its degree to the part count") {
  const Gadget g = linkage_gadget(routable(), 2, 3);
  const Vertex x = 6, y = 7;
  CHECK(g.graph.order() == 10);  // one subdivided two-cycle adds two vertices
  CHECK(g.graph.in_degree(x) == 3);
  CHECK(g.graph.out_degree(x) == 3);
  CHECK(g.graph.in_degree(y) == 3);
  CHECK(g.graph.out_degree(y) == 3);
  CHECK(g.graph.label(8).substr(0, 4) == "sub(");
  CHECK(g.graph.label(9).substr(0, 4) == "sub(");
}

TEST_CASE("satellite anchors hang off the first hub by subdivided cycles") {
  const Gadget g = linkage_gadget(routable(), 3, 2);
  CHECK(g.graph.order() == 6 + 2 + 1 + 4);
  const Vertex x1 = 8;
  CHECK(g.anchor == VertexSet{6, 7, x1});
  CHECK(g.graph.label(x1) == "x_1");
  CHECK(g.graph.in_degree(x1) == 2);
  CHECK(g.graph.out_degree(x1) == 2);
  // Arcs at the satellite go through subdivision vertices only.
  for (Vertex w : g.graph.out(x1)) CHECK(g.graph.label(w).substr(0, 4) == "sub(");
  for (Vertex w : g.graph.in(x1)) CHECK(g.graph.label(w).substr(0, 4) == "sub(");
}

TEST_CASE("gadget order follows the parameter arithmetic") {
  for (int k : {2, 3, 4}) {
    for (int ell : {2, 3}) {
      const Gadget g = linkage_gadget(routable(), k, ell);
      CHECK(g.graph.order() == 6 + 2 + 2 * (ell - 2) + (k - 2) * (1 + 2 * ell));
      CHECK(g.anchor.size() == k);
      CHECK(g.ell == ell);
    }
  }
}

TEST_CASE("gadget construction validates its arguments") {
  Linkage2Instance bad = routable();
  bad.t2 = bad.s1;
  CHECK(kind_of([&] { linkage_gadget(bad, 2, 2); }) == "invalid-terminal");
  bad = routable();
  bad.t2 = 17;
  CHECK(kind_of([&] { linkage_gadget(bad, 2, 2); }) == "invalid-terminal");
  CHECK(kind_of([&] { linkage_gadget(routable(), 1, 2); }) == "invalid-k");
  CHECK(kind_of([&] { linkage_gadget(routable(), 2, 1); }) == "invalid-ell");
}

TEST_CASE("the reduction preserves the answer in both directions") {
  // Routable base: the gadget packs two parts.
  CHECK(directed_linkage(routable().host, {{{0, 1}, {2, 3}}}).has_value());
  CHECK(gadget_equivalence_check(routable(), 2, 2));

  // Blocked base: it does not.
  CHECK_FALSE(directed_linkage(blocked().host, {{{0, 1}, {2, 3}}}).has_value());
  CHECK(gadget_equivalence_check(blocked(), 2, 2));
  const Gadget g = linkage_gadget(blocked(), 2, 2);
  OracleLimits forced;
  forced.force = true;
  CHECK_FALSE(decide_kappa_s_at_least(g.graph, g.anchor, g.ell, forced).has_value());

  Linkage2Instance big = routable();
  big.host = Digraph(7, big.host.arcs());
  CHECK(kind_of([&] { gadget_equivalence_check(big, 2, 2); }) == "size-guard");
}

TEST_CASE("tripartite instances are validated") {
  CLLMInstance inst;
  inst.graph = UndirectedGraph(3, {{0, 1}});
  inst.u_class = {0};
  inst.v_class = {1};
  inst.w_class = {1};
  CHECK(kind_of([&] { cllm_solve(inst); }) == "invalid-cllm");
  inst.w_class = {2};
  CHECK(cllm_solve(inst).has_value() == false);  // one edge only

  CLLMInstance sized;
  sized.graph = UndirectedGraph(4, {});
  sized.u_class = {0};
  sized.v_class = {1};
  sized.w_class = {2};
  CHECK(kind_of([&] { cllm_solve(sized); }) == "invalid-cllm");

  CLLMInstance intra;
  intra.graph = UndirectedGraph(6, {{0, 1}});
  intra.u_class = {0, 1};
  intra.v_class = {2, 3};
  intra.w_class = {4, 5};
  CHECK(kind_of([&] { cllm_solve(intra); }) == "invalid-cllm");
}

TEST_CASE("triple matching on hand instances") {
  SUBCASE("single connected triple") {
    CLLMInstance inst;
    inst.graph = UndirectedGraph(3, {{0, 1}, {1, 2}});
    inst.u_class = {0};
    inst.v_class = {1};
    inst.w_class = {2};
    const auto triples = cllm_solve(inst);
    REQUIRE(triples.has_value());
    CHECK((*triples)[0] == std::array<Vertex, 3>{0, 1, 2});
  }
  SUBCASE("two planted triples") {
    CLLMInstance inst;
    inst.graph = UndirectedGraph(6, {{0, 2}, {2, 4}, {1, 3}, {3, 5}});
    inst.u_class = {0, 1};
    inst.v_class = {2, 3};
    inst.w_class = {4, 5};
    const auto triples = cllm_solve(inst);
    REQUIRE(triples.has_value());
    for (const auto& t : *triples) {
      int edges = 0;
      if (inst.graph.has_edge(t[0], t[1])) ++edges;
      if (inst.graph.has_edge(t[0], t[2])) ++edges;
      if (inst.graph.has_edge(t[1], t[2])) ++edges;
      CHECK(edges >= 2);
    }
  }
  SUBCASE("starved instance") {
    CLLMInstance inst;
    inst.graph = UndirectedGraph(6, {{0, 2}, {1, 2}});
    inst.u_class = {0, 1};
    inst.v_class = {2, 3};
    inst.w_class = {4, 5};
    CHECK_FALSE(cllm_solve(inst).has_value());
  }
}

TEST_CASE("the matching gadget biorients the hub-extended graph") {
  CLLMInstance inst;
  inst.graph = UndirectedGraph(6, {{0, 2}, {2, 4}, {1, 3}, {3, 5}});
  inst.u_class = {0, 1};
  inst.v_class = {2, 3};
  inst.w_class = {4, 5};
  const Gadget g = cllm_gadget(inst, 3);
  CHECK(g.graph.order() == 9);
  CHECK(g.anchor == VertexSet{6, 7, 8});
  CHECK(g.ell == 2);
  CHECK(is_symmetric(g.graph));
  CHECK(g.graph.label(6) == "x_1");
  CHECK(g.graph.label(8) == "x_3");
  CHECK(g.graph.label(0) == "u0");
  // Every hub touches exactly its class: degree q each way.
  for (Vertex hub : g.anchor) {
    CHECK(g.graph.out_degree(hub) == 2);
    CHECK(g.graph.in_degree(hub) == 2);
  }
  // Hub 1 to the first class, hub 3 to the third.
  CHECK(g.graph.has_arc(6, 0));
  CHECK(g.graph.has_arc(6, 1));
  CHECK(g.graph.has_arc(7, 2));
  CHECK(g.graph.has_arc(8, 4));
  CHECK(kind_of([&] { cllm_gadget(inst, 2); }) == "invalid-k");

  const Gadget wider = cllm_gadget(inst, 4);
  CHECK(wider.graph.order() == 10);
  // Hubs 1 and 2 both lean on the first class.
  CHECK(wider.graph.has_arc(6, 0));
  CHECK(wider.graph.has_arc(7, 0));
  CHECK(wider.graph.has_arc(8, 2));
  CHECK(wider.graph.has_arc(9, 4));
}

TEST_CASE("matching and packing answers coincide") {
  SUBCASE("positive with one triple") {
    CLLMInstance inst;
    inst.graph = UndirectedGraph(3, {{0, 1}, {1, 2}});
    inst.u_class = {0};
    inst.v_class = {1};
    inst.w_class = {2};
    CHECK(cllm_equivalence_check(inst, 3));
  }
  SUBCASE("negative with one triple") {
    CLLMInstance inst;
    inst.graph = UndirectedGraph(3, {{0, 1}});
    inst.u_class = {0};
    inst.v_class = {1};
    inst.w_class = {2};
    CHECK(cllm_equivalence_check(inst, 3));
  }
  SUBCASE("positive with two triples") {
    CLLMInstance inst;
    inst.graph = UndirectedGraph(6, {{0, 2}, {2, 4}, {1, 3}, {3, 5}});
    inst.u_class = {0, 1};
    inst.v_class = {2, 3};
    inst.w_class = {4, 5};
    CHECK(cllm_equivalence_check(inst, 3));
  }
  SUBCASE("negative with two triples") {
    CLLMInstance inst;
    inst.graph = UndirectedGraph(6, {{0, 2}, {1, 2}});
    inst.u_class = {0, 1};
    inst.v_class = {2, 3};
    inst.w_class = {4, 5};
    CHECK(cllm_equivalence_check(inst, 3));
  }
}
