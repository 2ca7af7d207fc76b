#include "strongsub/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace strongsub {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

UndirectedGraph::UndirectedGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error("vertex-range", "negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw Error("self-loop", "edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_)
      throw Error("vertex-range", "edge endpoint outside 0.." + std::to_string(n_ - 1));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error("parallel-edge", "duplicate edge in edge list");
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

const std::vector<Vertex>& UndirectedGraph::neighbors(Vertex v) const {
  if (v < 0 || v >= n_) throw Error("vertex-range", "vertex " + std::to_string(v));
  return adj_[v];
}

Digraph::Digraph(int n, std::vector<Arc> arcs, std::vector<std::string> labels)
    : n_(n), arcs_(std::move(arcs)), labels_(std::move(labels)) {
  if (n < 0) throw Error("vertex-range", "negative vertex count");
  for (const Arc& a : arcs_) {
    if (a.from == a.to)
      throw Error("self-loop", "arc " + std::to_string(a.from) + ">" + std::to_string(a.to));
    if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
      throw Error("vertex-range", "arc endpoint outside 0.." + std::to_string(n_ - 1));
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
    throw Error("parallel-arc", "duplicate arc in arc list");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
    throw Error("label-size", "label list must be empty or have one entry per vertex");
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (const Arc& a : arcs_) {
    out_[a.from].push_back(a.to);
    in_[a.to].push_back(a.from);
  }
  // arcs_ is sorted, so out-lists are already ascending; in-lists are not.
  for (auto& nb : in_) std::sort(nb.begin(), nb.end());
}

bool Digraph::has_arc(Vertex u, Vertex v) const { return arc_index(u, v) >= 0; }

int Digraph::arc_index(Vertex u, Vertex v) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, v});
  if (it == arcs_.end() || it->from != u || it->to != v) return -1;
  return static_cast<int>(it - arcs_.begin());
}

const std::vector<Vertex>& Digraph::out(Vertex v) const {
  if (v < 0 || v >= n_) throw Error("vertex-range", "vertex " + std::to_string(v));
  return out_[v];
}

const std::vector<Vertex>& Digraph::in(Vertex v) const {
  if (v < 0 || v >= n_) throw Error("vertex-range", "vertex " + std::to_string(v));
  return in_[v];
}

const std::string& Digraph::label(Vertex v) const {
  if (labels_.empty()) throw Error("label-size", "digraph carries no labels");
  if (v < 0 || v >= n_) throw Error("vertex-range", "vertex " + std::to_string(v));
  return labels_[v];
}

namespace {

// Iterative Tarjan; components come out in reverse topological order.
std::vector<std::vector<Vertex>> tarjan(const Digraph& d) {
  const int n = d.order();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> comps;
  int next_index = 0;

  struct Frame {
    Vertex v;
    size_t child;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& succ = d.out(f.v);
      if (f.child < succ.size()) {
        Vertex w = succ[f.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<Vertex> comp;
          Vertex w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
          } while (w != f.v);
          comps.push_back(std::move(comp));
        }
        Vertex v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return comps;
}

}  // namespace

std::vector<VertexSet> strong_components(const Digraph& d) {
  auto comps = tarjan(d);
  std::reverse(comps.begin(), comps.end());  // sources first
  std::vector<VertexSet> out;
  out.reserve(comps.size());
  for (auto& c : comps) out.emplace_back(std::move(c));
  return out;
}

bool is_strong(const Digraph& d) {
  const int n = d.order();
  if (n == 0) return false;
  if (n == 1) return true;
  // forward and backward reachability from vertex 0
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> queue{0};
    seen[0] = 1;
    int found = 1;
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      for (Vertex w : dir == 0 ? d.out(v) : d.in(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          ++found;
          queue.push_back(w);
        }
      }
    }
    if (found != n) return false;
  }
  return true;
}

bool is_strong_subset(const Digraph& d, const std::vector<Vertex>& s) {
  if (s.empty()) return false;
  if (s.size() == 1) return true;
  std::vector<char> in_s(d.order(), 0);
  for (Vertex v : s) in_s[v] = 1;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<char> seen(d.order(), 0);
    std::vector<Vertex> queue{s[0]};
    seen[s[0]] = 1;
    size_t found = 1;
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      for (Vertex w : dir == 0 ? d.out(v) : d.in(v)) {
        if (in_s[w] && !seen[w]) {
          seen[w] = 1;
          ++found;
          queue.push_back(w);
        }
      }
    }
    if (found != s.size()) return false;
  }
  return true;
}

Digraph biorient(const UndirectedGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edges().size());
  for (auto [u, v] : g.edges()) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  return Digraph(g.order(), std::move(arcs));
}

UndirectedGraph underlying_graph(const Digraph& d) {
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const Arc& a : d.arcs()) edges.insert({std::min(a.from, a.to), std::max(a.from, a.to)});
  return UndirectedGraph(d.order(), {edges.begin(), edges.end()});
}

bool is_symmetric(const Digraph& d) {
  for (const Arc& a : d.arcs())
    if (!d.has_arc(a.to, a.from)) return false;
  return true;
}

bool is_semicomplete(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u)
    for (Vertex v = u + 1; v < d.order(); ++v)
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) return false;
  return true;
}

bool is_complete_biorientation(const Digraph& d) {
  const long long n = d.order();
  return d.arc_count() == n * (n - 1);
}

Digraph subdivide_arc(const Digraph& d, Vertex u, Vertex v) {
  if (!d.has_arc(u, v))
    throw Error("arc-absent", "arc " + std::to_string(u) + ">" + std::to_string(v));
  const Vertex w = d.order();
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count() + 1);
  for (const Arc& a : d.arcs())
    if (a.from != u || a.to != v) arcs.push_back(a);
  arcs.push_back({u, w});
  arcs.push_back({w, v});
  std::vector<std::string> labels = d.labels();
  if (!labels.empty()) labels.push_back("sub(" + labels[u] + ">" + labels[v] + ")");
  return Digraph(d.order() + 1, std::move(arcs), std::move(labels));
}

Subdigraph induced_subdigraph(const Digraph& d, const VertexSet& s) {
  for (Vertex v : s)
    if (v < 0 || v >= d.order())
      throw Error("invalid-vertex-set", "vertex " + std::to_string(v) + " outside host");
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs())
    if (s.contains(a.from) && s.contains(a.to)) arcs.push_back(a);
  return Subdigraph{s, std::move(arcs)};
}

std::pair<int, int> min_degrees(const Digraph& d) {
  if (d.order() == 0) throw Error("empty-digraph", "min_degrees needs at least one vertex");
  int dout = d.out_degree(0), din = d.in_degree(0);
  for (Vertex v = 1; v < d.order(); ++v) {
    dout = std::min(dout, d.out_degree(v));
    din = std::min(din, d.in_degree(v));
  }
  return {dout, din};
}

}  // namespace strongsub
