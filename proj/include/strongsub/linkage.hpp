#ifndef STRONGSUB_LINKAGE_HPP
#define STRONGSUB_LINKAGE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "strongsub/digraph.hpp"

namespace strongsub {

// Ordered source/target pairs for a disjoint-path query. All listed vertices
// must be pairwise distinct.
struct TerminalSequence {
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

// One path per terminal pair, pairwise vertex-disjoint (so in particular
// internally disjoint and sharing no endpoints). paths[i] runs from
// pairs[i].first to pairs[i].second.
struct Linkage {
  std::vector<std::vector<Vertex>> paths;
};

// Exact search for vertex-disjoint paths joining every terminal pair. The
// search is exponential in the worst case; it backtracks over partial paths,
// expanding neighbors in vertex-id order, and abandons a branch as soon as
// some unrouted pair loses reachability in the residual graph. The first
// solution found is deterministic. Throws "invalid-terminal" when terminals
// repeat or lie outside the graph.
std::optional<Linkage> directed_linkage(const Digraph& d, const TerminalSequence& t);

// Undirected variant; paths are vertex-disjoint paths in g.
std::optional<Linkage> undirected_linkage(const UndirectedGraph& g, const TerminalSequence& t);

}  // namespace strongsub

#endif
