#ifndef STRONGSUB_GADGETS_HPP
#define STRONGSUB_GADGETS_HPP

#include <array>
#include <optional>
#include <vector>

#include "strongsub/digraph.hpp"
#include "strongsub/packing.hpp"

namespace strongsub {

// A two-pair disjoint-path instance: are there vertex-disjoint paths
// s1 -> t1 and s2 -> t2? The four terminals must be distinct.
struct Linkage2Instance {
  Digraph host;
  Vertex s1 = 0, t1 = 0, s2 = 0, t2 = 0;
};

// A digraph with a designated anchor and target part count, produced by one
// of the hardness reductions below.
struct Gadget {
  Digraph graph;
  VertexSet anchor;
  int ell = 0;
};

// Reduction from the two-pair disjoint-path problem: the returned digraph
// admits ell internally disjoint strong sub-digraphs around its anchor iff
// the instance is solvable. The base digraph keeps its vertex ids; two hub
// vertices labeled "x" and "y" are wired to the terminals, ell-2 subdivided
// two-cycles widen the hub for ell > 2, and k-2 satellite anchors "x_i",
// each tied to "x" by ell subdivided two-cycles, extend the anchor for
// k > 2. Throws "invalid-terminal", "invalid-k" (k < 2), "invalid-ell"
// (ell < 2).
Gadget linkage_gadget(const Linkage2Instance& instance, int k, int ell);

// Decides both sides of the reduction exactly — the instance by a direct
// disjoint-path search, the gadget by the exhaustive packing search — and
// reports whether they agree. The guard bounds the base digraph
// ("size-guard"); the gadget itself is allowed to outgrow the usual
// exhaustive-search cap.
bool gadget_equivalence_check(const Linkage2Instance& instance, int k, int ell,
                              int max_base_n = 6);

// Tripartite matching instance: the classes partition the graph's vertices,
// all edges run between distinct classes, and the classes have equal size q.
// Asked: a partition into q triples, one vertex per class, each inducing a
// connected subgraph.
struct CLLMInstance {
  UndirectedGraph graph;
  std::vector<Vertex> u_class, v_class, w_class;
};

// Exhaustive matcher: tries every alignment of the second and third class
// against the first. A triple of distinct vertices is connected exactly when
// it induces at least two edges. Throws "invalid-cllm" on malformed
// instances.
std::optional<std::vector<std::array<Vertex, 3>>> cllm_solve(const CLLMInstance& instance);

// Reduction to symmetric digraphs: k anchor hubs are attached to the classes
// (hubs 1..k-2 to the first class, hub k-1 to the second, hub k to the
// third), everything is bioriented, and the target part count is q. The
// instance is solvable iff the gadget admits q internally disjoint strong
// sub-digraphs around the anchor. Throws "invalid-k" for k < 3.
Gadget cllm_gadget(const CLLMInstance& instance, int k);

// Decides both sides exactly (matcher vs. the symmetric packing decision)
// and reports whether they agree.
bool cllm_equivalence_check(const CLLMInstance& instance, int k);

}  // namespace strongsub

#endif
