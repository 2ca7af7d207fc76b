#ifndef STRONGSUB_PACKING_HPP
#define STRONGSUB_PACKING_HPP

#include <optional>
#include <string>
#include <vector>

#include "strongsub/digraph.hpp"

namespace strongsub {

// A family of sub-digraphs of a common host that pairwise intersect exactly
// in the anchor vertex set and share no arcs. Each part must be strong and
// contain the anchor. An empty part list is a valid packing of size 0.
struct Packing {
  Digraph base;
  VertexSet anchor;
  std::vector<Subdigraph> parts;
  int size() const { return static_cast<int>(parts.size()); }
};

// First violated invariant as a short name ("part-not-strong",
// "vertex-overlap", "arc-overlap", "anchor-missing"), or nullopt when the
// packing is valid. Parts that do not fit the host at all (arcs absent from
// it, endpoints outside the part's vertex set) raise "host-mismatch".
std::optional<std::string> packing_violation(const Packing& p);

// True iff packing_violation(p) is empty.
bool verify_packing(const Packing& p);

// Value of a connectivity computation together with an optional certificate
// packing of that size and, for minimization over vertex sets, a minimizing
// set.
struct KappaResult {
  int value = 0;
  std::optional<Packing> certificate;
  std::optional<VertexSet> witness_set;
};

// The arcs spanned by an anchor set, split into labeled cells. Cells may be
// empty; together they must hold every spanned arc exactly once.
struct ArcPartition {
  std::vector<std::vector<Arc>> cells;
};

// Arcs of d with both endpoints in s, in global arc order.
std::vector<Arc> anchor_spanned_arcs(const Digraph& d, const VertexSet& s);

// Throws "invalid-s" unless s has at least two members, all inside d.
void require_anchor(const Digraph& d, const VertexSet& s);

}  // namespace strongsub

#endif
