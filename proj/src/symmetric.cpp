#include "strongsub/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "strongsub/linkage.hpp"
#include "strongsub/partitions.hpp"

namespace strongsub {

namespace {

struct LocalFlow {
  int value = 0;
  std::vector<std::vector<Vertex>> paths;
};

// Maximum number of internally disjoint x..y paths via a unit-capacity flow:
// every vertex is split into an in-half and an out-half joined by a capacity
// one arc, every edge contributes an arc of capacity one each way between
// the halves, and the flow runs from the out-half of x to the in-half of y.
LocalFlow local_connectivity(const UndirectedGraph& g, Vertex x, Vertex y, bool want_paths) {
  const int n = g.order();
  const int size = 2 * n;
  auto in_half = [](Vertex v) { return 2 * v; };
  auto out_half = [](Vertex v) { return 2 * v + 1; };
  std::vector<std::vector<int>> cap(size, std::vector<int>(size, 0));
  for (Vertex v = 0; v < n; ++v) cap[in_half(v)][out_half(v)] = 1;
  for (const auto& [u, v] : g.edges()) {
    cap[out_half(u)][in_half(v)] = 1;
    cap[out_half(v)][in_half(u)] = 1;
  }
  const std::vector<std::vector<int>> base = cap;
  const int src = out_half(x), dst = in_half(y);

  LocalFlow flow;
  while (true) {
    std::vector<int> prev(size, -1);
    prev[src] = src;
    std::queue<int> queue;
    queue.push(src);
    while (!queue.empty() && prev[dst] < 0) {
      const int u = queue.front();
      queue.pop();
      for (int w = 0; w < size; ++w) {
        if (cap[u][w] <= 0 || prev[w] >= 0) continue;
        prev[w] = u;
        queue.push(w);
      }
    }
    if (prev[dst] < 0) break;
    for (int w = dst; w != src; w = prev[w]) {
      cap[prev[w]][w] -= 1;
      cap[w][prev[w]] += 1;
    }
    ++flow.value;
  }
  if (!want_paths) return flow;

  std::vector<std::vector<int>> used(size, std::vector<int>(size, 0));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) used[a][b] = std::max(0, base[a][b] - cap[a][b]);
  for (int p = 0; p < flow.value; ++p) {
    std::vector<Vertex> path{x};
    int cur = src;
    while (cur != dst) {
      int next = -1;
      for (int w = 0; w < size; ++w)
        if (used[cur][w] > 0) {
          next = w;
          break;
        }
      used[cur][next] -= 1;
      if (next % 2 == 0) path.push_back(next / 2);
      cur = next;
    }
    flow.paths.push_back(std::move(path));
  }
  return flow;
}

// Vertices reachable from vertex 0.
std::vector<char> reach_from_zero(const UndirectedGraph& g) {
  std::vector<char> seen(g.order(), 0);
  if (g.order() == 0) return seen;
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return seen;
}

using ForestEdges = std::vector<std::pair<Vertex, Vertex>>;

// Searches for edge-disjoint acceptable forests, one per anchor-arc cell.
// Skeletons are enumerated once; realizations depend only on the multiset of
// chosen skeletons, so they are cached under the sorted skeleton tuple and
// shared across cell partitions.
class ForestSearch {
 public:
  ForestSearch(const UndirectedGraph& g, const VertexSet& s)
      : g_(g), s_(s), skeletons_(enumerate_skeletons(g, s)) {
    outside_.resize(skeletons_.size());
    for (size_t t = 0; t < skeletons_.size(); ++t)
      for (Vertex v : skeletons_[t].vertices())
        if (!s_.contains(v)) outside_[t].push_back(v);
  }

  std::optional<std::vector<ForestEdges>> find(const ArcPartition& cells) {
    const int ell = static_cast<int>(cells.cells.size());
    std::vector<std::vector<int>> acc(ell);
    for (int i = 0; i < ell; ++i) {
      for (size_t t = 0; t < skeletons_.size(); ++t)
        if (acceptable(skeletons_[t], cells.cells[i])) acc[i].push_back(static_cast<int>(t));
      if (acc[i].empty()) return std::nullopt;
    }
    std::vector<int> tuple(ell, -1);
    std::vector<char> used(g_.order(), 0);
    return choose(acc, tuple, used, 0);
  }

 private:
  // Does biorienting the skeleton and adding the cell give a strong digraph
  // through the whole anchor?
  bool acceptable(const Skeleton& sk, const std::vector<Arc>& cell) const {
    std::set<Vertex> verts;
    for (const auto& [u, v] : sk.edges) {
      verts.insert(u);
      verts.insert(v);
    }
    for (const Arc& a : cell) {
      verts.insert(a.from);
      verts.insert(a.to);
    }
    for (Vertex v : s_)
      if (!verts.count(v)) return false;
    const std::vector<Vertex> order(verts.begin(), verts.end());
    auto id = [&](Vertex v) {
      return static_cast<int>(std::lower_bound(order.begin(), order.end(), v) - order.begin());
    };
    std::set<Arc> arcs;
    for (const auto& [u, v] : sk.edges) {
      arcs.insert({id(u), id(v)});
      arcs.insert({id(v), id(u)});
    }
    for (const Arc& a : cell) arcs.insert({id(a.from), id(a.to)});
    return is_strong(Digraph(static_cast<int>(order.size()),
                             std::vector<Arc>(arcs.begin(), arcs.end())));
  }

  std::optional<std::vector<ForestEdges>> choose(const std::vector<std::vector<int>>& acc,
                                                 std::vector<int>& tuple, std::vector<char>& used,
                                                 int i) {
    if (i == static_cast<int>(tuple.size())) return realize_aligned(tuple);
    for (int t : acc[i]) {
      bool clash = false;
      for (Vertex v : outside_[t])
        if (used[v]) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (Vertex v : outside_[t]) used[v] = 1;
      tuple[i] = t;
      if (auto got = choose(acc, tuple, used, i + 1)) return got;
      for (Vertex v : outside_[t]) used[v] = 0;
    }
    return std::nullopt;
  }

  std::optional<std::vector<ForestEdges>> realize_aligned(const std::vector<int>& tuple) {
    std::vector<int> key(tuple);
    std::sort(key.begin(), key.end());
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, realize_sorted(key)).first;
    if (!it->second) return std::nullopt;
    std::vector<char> taken(key.size(), 0);
    std::vector<ForestEdges> out(tuple.size());
    for (size_t i = 0; i < tuple.size(); ++i)
      for (size_t j = 0; j < key.size(); ++j)
        if (!taken[j] && key[j] == tuple[i]) {
          taken[j] = 1;
          out[i] = (*it->second)[j];
          break;
        }
    return out;
  }

  // Realize every skeleton edge by a path: each skeleton vertex becomes one
  // terminal copy per incident skeleton edge, other host vertices become
  // single free nodes, and a host edge that is itself a skeleton edge is
  // funneled through a junction node so at most one path can consume it.
  // Vertex-disjointness of the linkage then gives edge-disjoint forests that
  // overlap only at shared anchor copies.
  std::optional<std::vector<ForestEdges>> realize_sorted(const std::vector<int>& key) {
    const int n = g_.order();
    const int m = static_cast<int>(key.size());
    std::vector<std::vector<std::pair<int, int>>> inc(n);  // (slot, edge index)
    for (int i = 0; i < m; ++i) {
      const Skeleton& sk = skeletons_[key[i]];
      for (size_t e = 0; e < sk.edges.size(); ++e) {
        inc[sk.edges[e].first].push_back({i, static_cast<int>(e)});
        inc[sk.edges[e].second].push_back({i, static_cast<int>(e)});
      }
    }
    std::vector<Vertex> node_host;
    auto add_node = [&](Vertex v) {
      node_host.push_back(v);
      return static_cast<int>(node_host.size()) - 1;
    };
    std::vector<std::vector<int>> nodes_of(n);
    std::map<std::tuple<int, int, Vertex>, int> copy_of;
    for (Vertex v = 0; v < n; ++v) {
      if (inc[v].empty()) {
        nodes_of[v].push_back(add_node(v));
      } else {
        for (const auto& [i, e] : inc[v]) {
          const int id = add_node(v);
          nodes_of[v].push_back(id);
          copy_of[{i, e, v}] = id;
        }
      }
    }
    std::map<std::pair<Vertex, Vertex>, int> junction;
    for (int i = 0; i < m; ++i)
      for (const auto& edge : skeletons_[key[i]].edges)
        if (g_.has_edge(edge.first, edge.second) && !junction.count(edge))
          junction.emplace(edge, add_node(-1));

    auto norm = [](int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    std::set<std::pair<int, int>> eset;
    for (const auto& [u, v] : g_.edges()) {
      const auto jit = junction.find({u, v});
      if (jit != junction.end()) {
        for (int a : nodes_of[u]) eset.insert(norm(a, jit->second));
        for (int b : nodes_of[v]) eset.insert(norm(b, jit->second));
      } else {
        for (int a : nodes_of[u])
          for (int b : nodes_of[v]) eset.insert(norm(a, b));
      }
    }

    TerminalSequence terms;
    std::vector<int> pair_slot;
    for (int i = 0; i < m; ++i) {
      const Skeleton& sk = skeletons_[key[i]];
      for (size_t e = 0; e < sk.edges.size(); ++e) {
        terms.pairs.push_back({copy_of[{i, static_cast<int>(e), sk.edges[e].first}],
                               copy_of[{i, static_cast<int>(e), sk.edges[e].second}]});
        pair_slot.push_back(i);
      }
    }

    const UndirectedGraph expanded(
        static_cast<int>(node_host.size()),
        std::vector<std::pair<Vertex, Vertex>>(eset.begin(), eset.end()));
    const auto routed = undirected_linkage(expanded, terms);
    if (!routed) return std::nullopt;

    std::vector<ForestEdges> forests(m);
    for (size_t p = 0; p < routed->paths.size(); ++p) {
      std::vector<Vertex> hostpath;
      for (Vertex node : routed->paths[p])
        if (node_host[node] >= 0) hostpath.push_back(node_host[node]);
      for (size_t j = 0; j + 1 < hostpath.size(); ++j)
        forests[pair_slot[p]].push_back(norm(hostpath[j], hostpath[j + 1]));
    }
    for (ForestEdges& f : forests) std::sort(f.begin(), f.end());
    validate_family(forests);
    return forests;
  }

  void validate_family(const std::vector<ForestEdges>& forests) const {
    std::set<std::pair<Vertex, Vertex>> all_edges;
    std::vector<std::set<Vertex>> vsets;
    for (const ForestEdges& f : forests) {
      std::map<Vertex, Vertex> parent;
      std::function<Vertex(Vertex)> root = [&](Vertex v) {
        auto it = parent.find(v);
        if (it == parent.end() || it->second == v) return v;
        return it->second = root(it->second);
      };
      std::set<Vertex> vs;
      for (const auto& e : f) {
        if (!g_.has_edge(e.first, e.second))
          throw Error("internal-error", "realized edge missing from the host");
        if (!all_edges.insert(e).second)
          throw Error("internal-error", "realized forests share an edge");
        vs.insert(e.first);
        vs.insert(e.second);
        const Vertex a = root(e.first), b = root(e.second);
        if (a == b) throw Error("internal-error", "realized forest has a cycle");
        parent[a] = b;
        parent.try_emplace(e.first, e.first);
        parent.try_emplace(e.second, e.second);
      }
      vsets.push_back(std::move(vs));
    }
    for (size_t i = 0; i < vsets.size(); ++i)
      for (size_t j = i + 1; j < vsets.size(); ++j)
        for (Vertex v : vsets[i])
          if (vsets[j].count(v) && !s_.contains(v))
            throw Error("internal-error", "realized forests meet outside the anchor");
  }

  const UndirectedGraph& g_;
  const VertexSet& s_;
  std::vector<Skeleton> skeletons_;
  std::vector<std::vector<Vertex>> outside_;
  std::map<std::vector<int>, std::optional<std::vector<ForestEdges>>> cache_;
};

}  // namespace

int vertex_connectivity(const UndirectedGraph& g) {
  const int n = g.order();
  if (n < 2) throw Error("too-small", "connectivity needs at least two vertices");
  int best = n;  // above every possible value
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      best = std::min(best, local_connectivity(g, x, y, false).value);
  return best;
}

KappaResult kappa2_symmetric(const UndirectedGraph& g, bool relaxed) {
  const int n = g.order();
  if (n < 2) throw Error("too-small", "need at least two vertices");
  const std::vector<char> seen = reach_from_zero(g);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    if (!relaxed) throw Error("not-connected", "the graph is disconnected");
    Vertex cut = 0;
    while (seen[cut]) ++cut;
    const VertexSet pair{0, cut};
    return {0, Packing{biorient(g), pair, {}}, pair};
  }

  int best = n;
  Vertex bx = 0, by = 1;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      const int value = local_connectivity(g, x, y, false).value;
      if (value < best) {
        best = value;
        bx = x;
        by = y;
      }
    }
  const LocalFlow flow = local_connectivity(g, bx, by, true);
  std::vector<Subdigraph> parts;
  for (const std::vector<Vertex>& path : flow.paths) {
    std::vector<Arc> arcs;
    for (size_t j = 0; j + 1 < path.size(); ++j) {
      arcs.push_back({path[j], path[j + 1]});
      arcs.push_back({path[j + 1], path[j]});
    }
    std::sort(arcs.begin(), arcs.end());
    parts.push_back(Subdigraph{VertexSet(path), std::move(arcs)});
  }
  Packing cert{biorient(g), VertexSet{bx, by}, std::move(parts)};
  if (auto violation = packing_violation(cert))
    throw Error("internal-error", "path certificate violates " + *violation);
  return {best, std::move(cert), VertexSet{bx, by}};
}

std::vector<Vertex> Skeleton::vertices() const {
  std::vector<Vertex> vs;
  for (const auto& [u, v] : edges) {
    vs.push_back(u);
    vs.push_back(v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<Skeleton> enumerate_skeletons(const UndirectedGraph& g, const VertexSet& s) {
  if (s.size() < 2) throw Error("invalid-s", "anchor needs at least two vertices");
  if (s.size() > 4) throw Error("size-guard", "anchor too large for skeleton enumeration");
  for (Vertex v : s)
    if (v < 0 || v >= g.order()) throw Error("invalid-s", "anchor vertex out of range");
  const int k = s.size();
  const int branch_budget = k - 2;
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!s.contains(v)) outside.push_back(v);

  std::vector<Skeleton> result;
  std::vector<Vertex> branch;
  // One pass per branch-vertex subset; every skeleton reappears for exactly
  // one subset because branch vertices are required to be used with degree
  // at least three.
  std::function<void(size_t)> per_subset = [&](size_t from) {
    std::vector<Vertex> pool(s.begin(), s.end());
    pool.insert(pool.end(), branch.begin(), branch.end());
    std::sort(pool.begin(), pool.end());
    std::vector<std::pair<Vertex, Vertex>> cands;
    for (size_t i = 0; i < pool.size(); ++i)
      for (size_t j = i + 1; j < pool.size(); ++j) cands.push_back({pool[i], pool[j]});
    const int c = static_cast<int>(cands.size());
    for (unsigned mask = 0; mask < (1u << c); ++mask) {
      std::map<Vertex, int> deg;
      std::map<Vertex, Vertex> parent;
      std::function<Vertex(Vertex)> root = [&](Vertex v) {
        auto it = parent.find(v);
        if (it == parent.end() || it->second == v) return v;
        return it->second = root(it->second);
      };
      bool ok = true;
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (int j = 0; j < c && ok; ++j) {
        if (!(mask & (1u << j))) continue;
        const auto& [u, v] = cands[j];
        const Vertex a = root(u), b = root(v);
        if (a == b) {
          ok = false;
          break;
        }
        parent[a] = b;
        parent.try_emplace(u, u);
        parent.try_emplace(v, v);
        ++deg[u];
        ++deg[v];
        edges.push_back(cands[j]);
      }
      if (!ok) continue;
      for (Vertex b : branch)
        if (deg[b] < 3) {
          ok = false;
          break;
        }
      if (!ok) continue;
      result.push_back(Skeleton{std::move(edges)});
    }
    for (size_t i = from; i < outside.size(); ++i) {
      if (static_cast<int>(branch.size()) == branch_budget) break;
      branch.push_back(outside[i]);
      per_subset(i + 1);
      branch.pop_back();
    }
  };
  per_subset(0);
  std::sort(result.begin(), result.end(),
            [](const Skeleton& a, const Skeleton& b) { return a.edges < b.edges; });
  return result;
}

std::optional<ForestPlan> acceptable_forest_packing(const UndirectedGraph& g, const VertexSet& s,
                                                    const ArcPartition& anchors) {
  if (s.size() < 2) throw Error("invalid-s", "anchor needs at least two vertices");
  for (Vertex v : s)
    if (v < 0 || v >= g.order()) throw Error("invalid-s", "anchor vertex out of range");
  for (Vertex u : s)
    for (Vertex v : s)
      if (u < v && g.has_edge(u, v))
        throw Error("invalid-s", "anchor must be independent in the host");
  std::set<Arc> seen;
  for (const std::vector<Arc>& cell : anchors.cells)
    for (const Arc& a : cell) {
      if (!s.contains(a.from) || !s.contains(a.to) || a.from == a.to)
        throw Error("invalid-partition", "cell arc is not an anchor-internal arc");
      if (!seen.insert(a).second) throw Error("invalid-partition", "arc assigned to two cells");
    }

  ForestSearch search(g, s);
  auto forests = search.find(anchors);
  if (!forests) return std::nullopt;
  ForestPlan plan{std::move(*forests), anchors};
  for (size_t i = 0; i < plan.forests.size(); ++i) {
    // Re-check acceptability on the realized forest, not just its skeleton.
    std::set<Vertex> verts;
    std::set<Arc> arcs;
    for (const auto& [u, v] : plan.forests[i]) {
      verts.insert(u);
      verts.insert(v);
      arcs.insert({u, v});
      arcs.insert({v, u});
    }
    for (const Arc& a : plan.anchors.cells[i]) {
      verts.insert(a.from);
      verts.insert(a.to);
      arcs.insert(a);
    }
    const std::vector<Vertex> order(verts.begin(), verts.end());
    auto id = [&](Vertex v) {
      return static_cast<int>(std::lower_bound(order.begin(), order.end(), v) - order.begin());
    };
    std::vector<Arc> local;
    for (const Arc& a : arcs) local.push_back({id(a.from), id(a.to)});
    bool holds = true;
    for (Vertex v : s)
      if (!verts.count(v)) holds = false;
    if (holds && !is_strong(Digraph(static_cast<int>(order.size()), std::move(local))))
      holds = false;
    if (!holds) throw Error("internal-error", "realized forest is not acceptable");
  }
  return plan;
}

std::optional<Packing> decide_kappa_s_symmetric(const Digraph& d, const VertexSet& s, int ell) {
  if (!is_symmetric(d)) throw Error("not-symmetric", "the host is not symmetric");
  require_anchor(d, s);
  if (ell < 0) throw Error("invalid-ell", "negative part count");
  if (ell == 0) return Packing{d, s, {}};
  // Each part spends one private out-arc and in-arc of every anchor vertex.
  for (Vertex v : s)
    if (d.out_degree(v) < ell || d.in_degree(v) < ell) return std::nullopt;

  const std::vector<Arc> spanned = anchor_spanned_arcs(d, s);
  std::vector<Arc> rest;
  for (const Arc& a : d.arcs())
    if (!(s.contains(a.from) && s.contains(a.to))) rest.push_back(a);
  const UndirectedGraph gs = underlying_graph(Digraph(d.order(), std::move(rest)));

  ForestSearch search(gs, s);
  std::optional<Packing> found;
  for_each_cell_assignment(
      static_cast<int>(spanned.size()), ell, [&](const std::vector<int>& assign) {
        ArcPartition partition;
        partition.cells.assign(ell, {});
        for (size_t j = 0; j < spanned.size(); ++j)
          partition.cells[assign[j]].push_back(spanned[j]);
        const auto forests = search.find(partition);
        if (!forests) return true;

        std::vector<Subdigraph> parts;
        for (int i = 0; i < ell; ++i) {
          std::set<Vertex> verts;
          std::set<Arc> arcs;
          for (const auto& [u, v] : (*forests)[i]) {
            verts.insert(u);
            verts.insert(v);
            arcs.insert({u, v});
            arcs.insert({v, u});
          }
          for (const Arc& a : partition.cells[i]) {
            verts.insert(a.from);
            verts.insert(a.to);
            arcs.insert(a);
          }
          parts.push_back(Subdigraph{VertexSet(std::vector<Vertex>(verts.begin(), verts.end())),
                                     std::vector<Arc>(arcs.begin(), arcs.end())});
        }
        Packing packing{d, s, std::move(parts)};
        if (auto violation = packing_violation(packing))
          throw Error("internal-error", "forest packing violates " + *violation);
        found = std::move(packing);
        return false;
      });
  return found;
}

}  // namespace strongsub
