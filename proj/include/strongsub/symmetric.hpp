#ifndef STRONGSUB_SYMMETRIC_HPP
#define STRONGSUB_SYMMETRIC_HPP

#include <optional>
#include <utility>
#include <vector>

#include "strongsub/digraph.hpp"
#include "strongsub/packing.hpp"

namespace strongsub {

// Minimum over all vertex pairs of the maximum number of internally disjoint
// paths joining them, computed by unit-capacity flows with split vertices.
// Matches the cut definition of connectivity on non-complete graphs and
// yields n-1 on complete ones. Throws "too-small" when g has fewer than two
// vertices.
int vertex_connectivity(const UndirectedGraph& g);

// Two-vertex anchors in the complete biorientation of g: the optimum equals
// vertex_connectivity(g), certified by biorienting a largest family of
// internally disjoint paths between a minimizing pair. A disconnected graph
// yields 0 with an empty certificate when relaxed is set and throws
// "not-connected" otherwise.
KappaResult kappa2_symmetric(const UndirectedGraph& g, bool relaxed = false);

// Contraction pattern of a forest: every non-anchor vertex of degree two is
// smoothed away, so skeleton edges may join vertices that are not adjacent
// in the host. Edges are stored sorted, lower endpoint first.
struct Skeleton {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> vertices() const;  // endpoints, sorted, deduplicated
  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

// Every skeleton a relevant forest can contract to: forests over the anchor
// plus at most |s|-2 non-anchor branch vertices, all leaves anchored, no
// degree-2 vertex off the anchor, no isolated vertices. The empty skeleton
// is included. Throws "size-guard" when the anchor is too large to
// enumerate (|s| > 4).
std::vector<Skeleton> enumerate_skeletons(const UndirectedGraph& g, const VertexSet& s);

// Edge-disjoint forests, one per cell, meeting only inside the anchor;
// forests[i] realizes a skeleton acceptable for cell i.
struct ForestPlan {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> forests;
  ArcPartition anchors;
};

// Decides whether edge-disjoint forests F_i of g exist, pairwise meeting
// only inside the anchor, such that biorienting F_i and adding cell i gives
// a strong digraph containing the anchor. The anchor must be independent in
// g ("invalid-s"); cells must hold distinct anchor-internal arcs
// ("invalid-partition").
std::optional<ForestPlan> acceptable_forest_packing(const UndirectedGraph& g, const VertexSet& s,
                                                    const ArcPartition& anchors);

// Decides whether ell internally disjoint strong sub-digraphs around s exist
// in a symmetric digraph, by searching forest packings over every partition
// of the anchor-spanned arcs. Returns a verified packing on success.
// Throws "not-symmetric", "invalid-s", "invalid-ell".
std::optional<Packing> decide_kappa_s_symmetric(const Digraph& d, const VertexSet& s, int ell);

}  // namespace strongsub

#endif
