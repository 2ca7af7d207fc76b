#ifndef STRONGSUB_DIGRAPH_HPP
#define STRONGSUB_DIGRAPH_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strongsub {

using Vertex = int;

// Error with a stable machine-checkable kind ("arc-absent", "size-guard", ...)
// followed by a human-readable detail message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// A sorted duplicate-free set of vertex ids. Construction normalizes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  const std::vector<Vertex>& members() const { return members_; }
  bool contains(Vertex v) const;
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Simple undirected graph on vertices 0..n-1, edges stored as sorted (u,v)
// pairs with u < v. Self-loops and duplicate edges are rejected.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;  // sorted, u < v
  std::vector<std::vector<Vertex>> adj_;
};

// Immutable simple digraph on dense vertex ids 0..n-1. The arc list is kept
// sorted so arc indices and every serialization are deterministic. Parallel
// arcs and self-loops are rejected at construction; antiparallel pairs are
// fine. Labels are optional and carried along by the transformations.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::vector<Arc> arcs, std::vector<std::string> labels = {});

  int order() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int index) const { return arcs_.at(index); }
  bool has_arc(Vertex u, Vertex v) const;
  // Index of (u,v) in the sorted arc list, or -1 when absent.
  int arc_index(Vertex u, Vertex v) const;
  const std::vector<Vertex>& out(Vertex v) const;
  const std::vector<Vertex>& in(Vertex v) const;
  int out_degree(Vertex v) const { return static_cast<int>(out(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in(v).size()); }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;  // sorted lexicographically
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> out_, in_;
};

// A sub-digraph of some host, given by an explicit vertex set and arc list.
// Arc endpoints must lie inside the vertex set; arcs must exist in the host.
struct Subdigraph {
  VertexSet vertices;
  std::vector<Arc> arcs;  // sorted
  friend bool operator==(const Subdigraph&, const Subdigraph&) = default;
};

// Strong components in an order where every arc of the condensation goes
// from an earlier component to a later one (sources first).
std::vector<VertexSet> strong_components(const Digraph& d);

// A digraph is strong when every ordered vertex pair is connected by a path.
// The one-vertex digraph counts as strong; the empty digraph does not.
bool is_strong(const Digraph& d);

// Is the induced subgraph on `s` strong (inside the subgraph, not the host)?
bool is_strong_subset(const Digraph& d, const std::vector<Vertex>& s);

// Complete biorientation: every edge uv becomes the arc pair uv, vu.
Digraph biorient(const UndirectedGraph& g);

// Underlying undirected graph: arcs collapse onto edges, directions dropped.
UndirectedGraph underlying_graph(const Digraph& d);

// True when for every arc uv the reverse arc vu is present as well.
bool is_symmetric(const Digraph& d);

// True when every pair of distinct vertices is joined by at least one arc.
bool is_semicomplete(const Digraph& d);

// True when d equals the complete biorientation of K_n.
bool is_complete_biorientation(const Digraph& d);

// Replace arc uv by the path u -> w -> v through a fresh vertex w = n.
// Throws "arc-absent" when uv is not an arc.
Digraph subdivide_arc(const Digraph& d, Vertex u, Vertex v);

// Induced sub-digraph on s. Throws "invalid-vertex-set" for out-of-range ids.
Subdigraph induced_subdigraph(const Digraph& d, const VertexSet& s);

// (min out-degree, min in-degree). Throws "empty-digraph" when n = 0.
std::pair<int, int> min_degrees(const Digraph& d);

}  // namespace strongsub

#endif
