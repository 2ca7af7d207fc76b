#include "strongsub/linkage.hpp"

#include <algorithm>

namespace strongsub {

namespace {

// Shared backtracking core. `fwd[v]` lists the vertices reachable from v in
// one step (for the undirected case this is the neighbor list, which makes
// the same code solve both variants).
class LinkageSearch {
 public:
  LinkageSearch(int n, std::vector<std::vector<Vertex>> fwd, const TerminalSequence& t)
      : n_(n), fwd_(std::move(fwd)), pairs_(t.pairs) {
    std::vector<char> seen(n_, 0);
    for (auto [s, u] : pairs_) {
      for (Vertex v : {s, u}) {
        if (v < 0 || v >= n_) throw Error("invalid-terminal", "vertex " + std::to_string(v));
        if (seen[v]) throw Error("invalid-terminal", "repeated terminal " + std::to_string(v));
        seen[v] = 1;
      }
    }
    terminal_of_.assign(n_, -1);
    for (size_t i = 0; i < pairs_.size(); ++i) {
      terminal_of_[pairs_[i].first] = static_cast<int>(i);
      terminal_of_[pairs_[i].second] = static_cast<int>(i);
    }
    used_.assign(n_, 0);
  }

  std::optional<Linkage> run() {
    paths_.assign(pairs_.size(), {});
    if (route(0)) return Linkage{paths_};
    return std::nullopt;
  }

 private:
  // Every pair >= `from` must still see its target through vertices that are
  // unused and not another pair's terminal; otherwise the branch is dead.
  bool residual_ok(size_t from) {
    for (size_t j = from; j < pairs_.size(); ++j) {
      auto [s, u] = pairs_[j];
      std::vector<char> seen(n_, 0);
      std::vector<Vertex> queue{s};
      seen[s] = 1;
      bool hit = false;
      while (!queue.empty() && !hit) {
        Vertex v = queue.back();
        queue.pop_back();
        for (Vertex w : fwd_[v]) {
          if (seen[w]) continue;
          if (w == u) {
            hit = true;
            break;
          }
          if (used_[w] || terminal_of_[w] != -1) continue;
          seen[w] = 1;
          queue.push_back(w);
        }
      }
      if (!hit) return false;
    }
    return true;
  }

  bool route(size_t i) {
    if (i == pairs_.size()) return true;
    if (!residual_ok(i)) return false;
    auto [s, u] = pairs_[i];
    paths_[i].push_back(s);
    used_[s] = 1;
    bool found = extend(i, s, u);
    if (!found) {
      used_[s] = 0;
      paths_[i].clear();
    }
    return found;
  }

  // Can `target` still be reached from the current head without touching
  // used vertices or foreign terminals?
  bool head_alive(Vertex head, Vertex target) {
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> queue{head};
    seen[head] = 1;
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      for (Vertex w : fwd_[v]) {
        if (seen[w]) continue;
        if (w == target) return true;
        if (used_[w] || terminal_of_[w] != -1) continue;
        seen[w] = 1;
        queue.push_back(w);
      }
    }
    return false;
  }

  bool extend(size_t i, Vertex v, Vertex target) {
    if (!head_alive(v, target)) return false;
    for (Vertex w : fwd_[v]) {
      if (w == target) {
        paths_[i].push_back(w);
        used_[w] = 1;
        if (route(i + 1)) return true;
        used_[w] = 0;
        paths_[i].pop_back();
        continue;
      }
      if (used_[w] || terminal_of_[w] != -1) continue;
      paths_[i].push_back(w);
      used_[w] = 1;
      if (extend(i, w, target)) return true;
      used_[w] = 0;
      paths_[i].pop_back();
    }
    return false;
  }

  int n_;
  std::vector<std::vector<Vertex>> fwd_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<int> terminal_of_;
  std::vector<char> used_;
  std::vector<std::vector<Vertex>> paths_;
};

}  // namespace

std::optional<Linkage> directed_linkage(const Digraph& d, const TerminalSequence& t) {
  std::vector<std::vector<Vertex>> fwd(d.order());
  for (Vertex v = 0; v < d.order(); ++v) fwd[v] = d.out(v);
  return LinkageSearch(d.order(), std::move(fwd), t).run();
}

std::optional<Linkage> undirected_linkage(const UndirectedGraph& g, const TerminalSequence& t) {
  std::vector<std::vector<Vertex>> fwd(g.order());
  for (Vertex v = 0; v < g.order(); ++v) fwd[v] = g.neighbors(v);
  return LinkageSearch(g.order(), std::move(fwd), t).run();
}

}  // namespace strongsub
