#ifndef STRONGSUB_SEMICOMPLETE_HPP
#define STRONGSUB_SEMICOMPLETE_HPP

#include <optional>
#include <vector>

#include "strongsub/digraph.hpp"
#include "strongsub/packing.hpp"

namespace strongsub {

// The split digraph built from a host, an anchor set and a partition of the
// anchor-spanned arcs into cells. Every anchor vertex is replaced by one
// copy per cell; copies keep the host arcs to and from non-anchor vertices,
// and the arcs of cell i are installed between the copies of seed i only, so
// distinct seeds never touch.
struct SplitDigraph {
  Digraph graph;
  // seeds[i] lists the cell-i copies, one per anchor vertex in anchor order.
  std::vector<std::vector<Vertex>> seeds;
  // original[v] is the host vertex that split vertex v stands for.
  std::vector<Vertex> original;
};

SplitDigraph build_split(const Digraph& d, const VertexSet& s, const ArcPartition& partition);

// Seed-extension instance: grow every seed into a strongly connected induced
// sub-digraph, with the grown vertex sets pairwise disjoint.
struct ExtensionInstance {
  Digraph host;
  std::vector<VertexSet> seeds;
};

// Exact decision of the seed-extension problem. Requires every vertex
// outside all seeds to be adjacent to every other vertex of the host
// (throws "hypothesis-violation" otherwise); returns grown sets Z_i with
// seeds[i] inside Z_i and host[Z_i] strong, or nullopt when no such family
// exists. Seeds must be non-empty and pairwise disjoint ("invalid-seed").
std::optional<std::vector<VertexSet>> strong_extension_packing(const ExtensionInstance& instance);

// Decides whether ell internally disjoint strong sub-digraphs around s exist
// in a semicomplete digraph, by splitting the anchor per arc-cell partition
// and solving seed extension on the split digraph. Returns a verified
// packing on success. Throws "not-semicomplete", "invalid-s", "invalid-ell".
std::optional<Packing> decide_kappa_s_semicomplete(const Digraph& d, const VertexSet& s, int ell);

// Outcome of running a per-anchor decision over every k-subset.
struct SubsetDecision {
  bool holds = false;
  // A k-subset that fails the decision, when holds is false and one exists.
  std::optional<VertexSet> witness;
};

// Does every k-subset S admit ell internally disjoint strong sub-digraphs?
// A digraph that is not strong fails for ell >= 1 without a subset witness.
SubsetDecision decide_kappa_k_semicomplete(const Digraph& d, int k, int ell);

}  // namespace strongsub

#endif
