#include "strongsub/extremal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace strongsub {

namespace {

// Backtracking decomposition search. Cycles are anchored at 0 and ordered by
// their first step, so cycle i consumes the i-th smallest unused out-arc of
// vertex 0; that breaks all cycle-permutation symmetry.
class DecompositionSearch {
 public:
  explicit DecompositionSearch(int n) : n_(n), used_(n, std::vector<char>(n, 0)) {}

  std::optional<HamiltonianDecomposition> run() {
    if (search(0, 0)) return HamiltonianDecomposition{n_, cycles_};
    return std::nullopt;
  }

 private:
  bool search(int cycle, int min_first_step) {
    if (cycle == n_ - 1) return true;
    for (Vertex first = std::max(1, min_first_step); first < n_; ++first) {
      if (used_[0][first]) continue;
      path_ = {0, first};
      on_path_.assign(n_, 0);
      on_path_[0] = on_path_[first] = 1;
      used_[0][first] = 1;
      if (extend(cycle, first)) return true;
      used_[0][first] = 0;
    }
    return false;
  }

  bool extend(int cycle, Vertex v) {
    if (static_cast<int>(path_.size()) == n_) {
      if (used_[v][0]) return false;
      used_[v][0] = 1;
      cycles_.push_back(path_);
      // the deeper search reuses path_/on_path_, so save them for backtracking
      std::vector<Vertex> saved_path = path_;
      std::vector<char> saved_on = on_path_;
      if (search(cycle + 1, path_[1] + 1)) return true;
      cycles_.pop_back();
      used_[v][0] = 0;
      path_ = std::move(saved_path);
      on_path_ = std::move(saved_on);
      return false;
    }
    // rotation seeding: continue with the same step size first
    const int step = (path_[1] - 0 + n_) % n_;
    std::vector<Vertex> order;
    Vertex pref = static_cast<Vertex>((v + step) % n_);
    if (pref != v && !on_path_[pref] && !used_[v][pref]) order.push_back(pref);
    for (Vertex w = 0; w < n_; ++w)
      if (w != pref && w != v && !on_path_[w] && !used_[v][w]) order.push_back(w);
    for (Vertex w : order) {
      path_.push_back(w);
      on_path_[w] = 1;
      used_[v][w] = 1;
      if (extend(cycle, w)) return true;
      used_[v][w] = 0;
      on_path_[w] = 0;
      path_.pop_back();
    }
    return false;
  }

  int n_;
  std::vector<std::vector<char>> used_;
  std::vector<std::vector<Vertex>> cycles_;
  std::vector<Vertex> path_;
  std::vector<char> on_path_;
};

std::mutex cache_mutex;
std::map<int, std::optional<HamiltonianDecomposition>> cache;

}  // namespace

std::optional<HamiltonianDecomposition> hamiltonian_decomposition(int n) {
  if (n < 2) throw Error("invalid-n", "need n >= 2, got " + std::to_string(n));
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto result = DecompositionSearch(n).run();
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache[n] = result;
  return result;
}

bool validate_decomposition(const HamiltonianDecomposition& dec) {
  const int n = dec.n;
  if (n < 2 || static_cast<int>(dec.cycles.size()) != n - 1) return false;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& cycle : dec.cycles) {
    if (static_cast<int>(cycle.size()) != n) return false;
    std::vector<char> visited(n, 0);
    for (Vertex v : cycle) {
      if (v < 0 || v >= n || visited[v]) return false;
      visited[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
      Vertex u = cycle[i], v = cycle[(i + 1) % n];
      if (!seen.insert({u, v}).second) return false;
    }
  }
  return static_cast<int>(seen.size()) == n * (n - 1);
}

int kappa_complete_biorientation(int n, int k) {
  if (k < 2 || k > n)
    throw Error("invalid-k", "k must satisfy 2 <= k <= n, got " + std::to_string(k));
  return (k == 4 || k == 6) ? n - 2 : n - 1;
}

namespace {

Subdigraph cycle_part(const std::vector<Vertex>& cycle) {
  std::vector<Arc> arcs;
  const int len = static_cast<int>(cycle.size());
  for (int i = 0; i < len; ++i) arcs.push_back({cycle[i], cycle[(i + 1) % len]});
  std::sort(arcs.begin(), arcs.end());
  return Subdigraph{VertexSet(cycle), std::move(arcs)};
}

}  // namespace

KnPackingPlan kn_packing_plan(int n, const VertexSet& s) {
  const int k = s.size();
  if (k < 2 || n < k) throw Error("invalid-s", "anchor must have 2 <= |s| <= n vertices");
  for (Vertex v : s)
    if (v < 0 || v >= n) throw Error("invalid-s", "anchor vertex outside 0..n-1");
  const auto& sv = s.members();

  KnPackingPlan plan;
  if (k == 4 || k == 6) {
    // k-2 parts: orientations of edge-disjoint undirected Hamiltonian cycles
    std::vector<std::vector<int>> tours;
    if (k == 4) {
      tours = {{0, 1, 2, 3}};
    } else {
      tours = {{0, 1, 2, 3, 4, 5}, {0, 2, 4, 1, 5, 3}};
    }
    for (const auto& tour : tours) {
      std::vector<Vertex> fwd, rev;
      for (int i : tour) fwd.push_back(sv[i]);
      rev = fwd;
      std::reverse(rev.begin() + 1, rev.end());
      plan.inner.push_back(cycle_part(fwd));
      plan.inner.push_back(cycle_part(rev));
    }
  } else {
    auto dec = hamiltonian_decomposition(k);
    // only k = 4 and k = 6 lack decompositions, and both are handled above
    if (!dec) throw Error("invalid-s", "no inner decomposition for k = " + std::to_string(k));
    for (const auto& cycle : dec->cycles) {
      std::vector<Vertex> mapped;
      for (Vertex i : cycle) mapped.push_back(sv[i]);
      plan.inner.push_back(cycle_part(mapped));
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    std::vector<Arc> arcs;
    for (Vertex u : sv) {
      arcs.push_back({u, v});
      arcs.push_back({v, u});
    }
    std::sort(arcs.begin(), arcs.end());
    std::vector<Vertex> verts = sv;
    verts.push_back(v);
    plan.stars.push_back(Subdigraph{VertexSet(std::move(verts)), std::move(arcs)});
  }
  return plan;
}

Packing construct_kn_packing(int n, const VertexSet& s) {
  auto plan = kn_packing_plan(n, s);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) arcs.push_back({u, v});
  Packing p{Digraph(n, std::move(arcs)), s, {}};
  for (auto& part : plan.inner) p.parts.push_back(std::move(part));
  for (auto& part : plan.stars) p.parts.push_back(std::move(part));
  return p;
}

std::pair<int, int> bounds(const Digraph& d, int k) {
  if (!is_strong(d)) throw Error("not-strong", "bounds need a strong digraph");
  if (k < 2 || k > d.order())
    throw Error("invalid-k", "k must satisfy 2 <= k <= n, got " + std::to_string(k));
  auto [dout, din] = min_degrees(d);
  return {1, std::min({d.order() - 1, dout, din})};
}

bool is_upper_bound_extremal(const Digraph& d, int k) {
  if (k < 2 || k > d.order()) return false;
  return is_complete_biorientation(d) && k != 4 && k != 6;
}

}  // namespace strongsub
