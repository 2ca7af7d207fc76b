#include "strongsub/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>

namespace strongsub {

namespace {

void check_guard(const Digraph& d, const OracleLimits& limits) {
  if (!limits.force && d.order() > limits.max_n)
    throw Error("size-guard", "n = " + std::to_string(d.order()) + " exceeds cap " +
                                  std::to_string(limits.max_n) + " (raise max_n or force)");
}

void check_anchor(const Digraph& d, const VertexSet& s) {
  if (s.size() < 2) throw Error("invalid-s", "anchor needs at least two vertices");
  for (Vertex v : s)
    if (v < 0 || v >= d.order())
      throw Error("invalid-s", "anchor vertex " + std::to_string(v) + " outside host");
}

struct StateKey {
  uint64_t arcs;
  uint64_t rest;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  size_t operator()(const StateKey& k) const {
    uint64_t h = k.arcs * 0x9e3779b97f4a7c15ULL;
    h ^= k.rest + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

// Backtracking search for one decide_kappa_s_at_least query. Parts are
// enumerated slot by slot; within a slot, candidate parts grow from a forced
// minimum arc by repeatedly repairing the most constrained strongness
// deficiency, which yields exactly the arc-minimal candidates.
class PackingSearch {
 public:
  PackingSearch(const Digraph& d, const VertexSet& s, int ell)
      : d_(d), arcs_(d.arcs()), n_(d.order()), m_(d.arc_count()), ell_(ell), s_(s) {
    in_s_.assign(n_, 0);
    for (Vertex v : s_) in_s_[v] = 1;
    out_ids_.assign(n_, {});
    in_ids_.assign(n_, {});
    for (int e = 0; e < m_; ++e) {
      out_ids_[arcs_[e].from].push_back(e);
      in_ids_[arcs_[e].to].push_back(e);
    }
    arc_used_.assign(m_, 0);
    vert_used_.assign(n_, 0);
    memo_enabled_ = m_ <= 64 && n_ <= 32;
  }

  std::optional<Packing> run() {
    parts_.clear();
    if (solve(0, 0)) {
      Packing p{d_, s_, parts_};
      return p;
    }
    return std::nullopt;
  }

 private:
  // ---- residual availability -------------------------------------------

  bool vertex_free(Vertex v) const { return in_s_[v] || !vert_used_[v]; }

  bool arc_avail(int e, int floor) const {
    return e >= floor && !arc_used_[e] && vertex_free(arcs_[e].from) && vertex_free(arcs_[e].to);
  }

  // Strong components of the arcs {e : arc_avail(e, floor)}; -2 marks
  // unavailable vertices.
  std::vector<int> avail_scc(int floor) const {
    std::vector<std::vector<Vertex>> fwd(n_), bwd(n_);
    for (int e = floor; e < m_; ++e) {
      if (!arc_avail(e, floor)) continue;
      fwd[arcs_[e].from].push_back(arcs_[e].to);
      bwd[arcs_[e].to].push_back(arcs_[e].from);
    }
    std::vector<int> comp(n_, -1);
    for (Vertex v = 0; v < n_; ++v)
      if (!vertex_free(v)) comp[v] = -2;
    int next = 0;
    for (Vertex root = 0; root < n_; ++root) {
      if (comp[root] != -1) continue;
      // forward/backward closure intersection = root's component
      auto closure = [&](const std::vector<std::vector<Vertex>>& adj) {
        std::vector<char> seen(n_, 0);
        std::vector<Vertex> queue{root};
        seen[root] = 1;
        while (!queue.empty()) {
          Vertex v = queue.back();
          queue.pop_back();
          for (Vertex w : adj[v])
            if (comp[w] == -1 && !seen[w]) {
              seen[w] = 1;
              queue.push_back(w);
            }
        }
        return seen;
      };
      auto f = closure(fwd), b = closure(bwd);
      for (Vertex v = 0; v < n_; ++v)
        if (f[v] && b[v]) comp[v] = next;
      ++next;
    }
    return comp;
  }

  // ---- slot-level search -------------------------------------------------

  bool solve(int slot, int floor) {
    if (slot == ell_) return true;
    const int slots_left = ell_ - slot;
    const int k = s_.size();

    int avail_count = 0;
    for (int e = floor; e < m_; ++e)
      if (arc_avail(e, floor)) ++avail_count;
    if (avail_count < slots_left * k) return false;
    for (Vertex v : s_) {
      int dout = 0, din = 0;
      for (int e : out_ids_[v])
        if (arc_avail(e, floor)) ++dout;
      for (int e : in_ids_[v])
        if (arc_avail(e, floor)) ++din;
      if (dout < slots_left || din < slots_left) return false;
    }

    StateKey key{};
    if (memo_enabled_) {
      uint64_t am = 0, vm = 0;
      for (int e = 0; e < m_; ++e)
        if (arc_used_[e]) am |= 1ULL << e;
      for (Vertex v = 0; v < n_; ++v)
        if (vert_used_[v]) vm |= 1ULL << v;
      key = {am, vm | (static_cast<uint64_t>(floor) << 40) |
                     (static_cast<uint64_t>(slot) << 56)};
      if (failed_.count(key)) return false;
    }

    std::vector<int> comp = avail_scc(floor);
    const int anchor_comp = comp[s_.members()[0]];
    bool ok = anchor_comp >= 0;
    for (Vertex v : s_) ok = ok && comp[v] == anchor_comp;

    if (ok) {
      for (int a = floor; a < m_; ++a) {
        if (!arc_avail(a, floor)) continue;
        if (comp[arcs_[a].from] != anchor_comp || comp[arcs_[a].to] != anchor_comp) continue;
        if (grow_from(slot, a)) return true;
      }
    }
    if (memo_enabled_) failed_.insert(key);
    return false;
  }

  // ---- part growth -------------------------------------------------------

  struct PartState {
    int forced;                    // minimum (and first) arc of the part
    int max_arcs;                  // arc budget left for this part
    std::vector<int> part;         // arc ids, insertion order
    std::vector<char> in_part;     // per arc id
    std::vector<char> in_z;        // part vertex set = s union endpoints
    std::vector<Vertex> z;         // same, as a list
    std::vector<int> outdeg, indeg;
    std::vector<int> s_out_cap, s_in_cap;  // remaining per-anchor-vertex arcs
    std::vector<int> comp;                 // availability components
    int anchor_comp;
    std::set<std::vector<int>> yielded;
  };

  bool grow_from(int slot, int a) {
    const int slots_left = ell_ - slot;
    const int k = s_.size();

    PartState st;
    st.forced = a;
    st.comp = avail_scc(a);
    st.anchor_comp = st.comp[s_.members()[0]];

    int avail_here = 0;
    for (int e = a; e < m_; ++e)
      if (arc_avail(e, a)) ++avail_here;
    st.max_arcs = avail_here - (slots_left - 1) * k;
    if (st.max_arcs < k) return false;

    st.s_out_cap.assign(n_, 0);
    st.s_in_cap.assign(n_, 0);
    for (Vertex v : s_) {
      int dout = 0, din = 0;
      for (int e : out_ids_[v])
        if (arc_avail(e, a)) ++dout;
      for (int e : in_ids_[v])
        if (arc_avail(e, a)) ++din;
      st.s_out_cap[v] = dout - (slots_left - 1);
      st.s_in_cap[v] = din - (slots_left - 1);
      if (st.s_out_cap[v] < 1 || st.s_in_cap[v] < 1) return false;
    }

    st.in_part.assign(m_, 0);
    st.in_z.assign(n_, 0);
    st.outdeg.assign(n_, 0);
    st.indeg.assign(n_, 0);
    for (Vertex v : s_) add_z(st, v);
    if (!add_arc(st, a)) return false;
    return grow(slot, st);
  }

  void add_z(PartState& st, Vertex v) {
    if (!st.in_z[v]) {
      st.in_z[v] = 1;
      st.z.push_back(v);
    }
  }

  // Returns false when the arc violates a budget (state rolled back).
  bool add_arc(PartState& st, int e) {
    const Arc& arc = arcs_[e];
    if (in_s_[arc.from] && st.s_out_cap[arc.from] == 0) return false;
    if (in_s_[arc.to] && st.s_in_cap[arc.to] == 0) return false;
    st.part.push_back(e);
    st.in_part[e] = 1;
    add_z(st, arc.from);
    add_z(st, arc.to);
    ++st.outdeg[arc.from];
    ++st.indeg[arc.to];
    if (in_s_[arc.from]) --st.s_out_cap[arc.from];
    if (in_s_[arc.to]) --st.s_in_cap[arc.to];
    return true;
  }

  void remove_arc(PartState& st, int e) {
    const Arc& arc = arcs_[e];
    st.part.pop_back();
    st.in_part[e] = 0;
    --st.outdeg[arc.from];
    --st.indeg[arc.to];
    if (in_s_[arc.from]) ++st.s_out_cap[arc.from];
    if (in_s_[arc.to]) ++st.s_in_cap[arc.to];
    // z is left as-is; stale members keep in_z set but deficiency checks and
    // strongness only consult vertices with degree, so roll z back instead.
    while (!st.z.empty()) {
      Vertex v = st.z.back();
      if (in_s_[v] || st.outdeg[v] > 0 || st.indeg[v] > 0) break;
      st.in_z[v] = 0;
      st.z.pop_back();
    }
  }

  // Forward (dir 0) or backward (dir 1) closure of `from` inside the part.
  std::vector<char> part_closure(const PartState& st, Vertex from, int dir) const {
    std::vector<char> seen(n_, 0);
    seen[from] = 1;
    std::vector<Vertex> queue{from};
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      for (int e : st.part) {
        Vertex x = dir == 0 ? arcs_[e].from : arcs_[e].to;
        Vertex y = dir == 0 ? arcs_[e].to : arcs_[e].from;
        if (x == v && !seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    return seen;
  }

  bool part_strong(const PartState& st) const {
    Vertex v0 = st.z.front();
    auto f = part_closure(st, v0, 0);
    auto b = part_closure(st, v0, 1);
    for (Vertex v : st.z)
      if (!f[v] || !b[v]) return false;
    return true;
  }

  bool arc_candidate(const PartState& st, int e) const {
    if (e <= st.forced || st.in_part[e] || arc_used_[e]) return false;
    const Arc& arc = arcs_[e];
    if (!vertex_free(arc.from) || !vertex_free(arc.to)) return false;
    if (st.comp[arc.from] != st.anchor_comp || st.comp[arc.to] != st.anchor_comp) return false;
    if (in_s_[arc.from] && st.s_out_cap[arc.from] == 0) return false;
    if (in_s_[arc.to] && st.s_in_cap[arc.to] == 0) return false;
    return true;
  }

  bool grow(int slot, PartState& st) {
    if (part_strong(st)) {
      std::vector<int> canon = st.part;
      std::sort(canon.begin(), canon.end());
      if (!st.yielded.insert(canon).second) return false;
      return commit_and_recurse(slot, st);
    }
    if (static_cast<int>(st.part.size()) >= st.max_arcs) return false;

    // deficiency selection: a vertex missing an out-arc, then one missing an
    // in-arc, then the lowest unreachable pair (branch on arcs leaving the
    // reachable set)
    std::vector<int> cands;
    Vertex bad = -1;
    std::vector<Vertex> zs = st.z;
    std::sort(zs.begin(), zs.end());
    for (Vertex v : zs)
      if (st.outdeg[v] == 0) {
        bad = v;
        break;
      }
    if (bad != -1) {
      for (int e : out_ids_[bad])
        if (arc_candidate(st, e)) cands.push_back(e);
    } else {
      for (Vertex v : zs)
        if (st.indeg[v] == 0) {
          bad = v;
          break;
        }
      if (bad != -1) {
        for (int e : in_ids_[bad])
          if (arc_candidate(st, e)) cands.push_back(e);
      } else {
        std::vector<char> reach;
        for (Vertex u : zs) {
          reach = part_closure(st, u, 0);
          bool all = true;
          for (Vertex w : zs) all = all && reach[w];
          if (!all) {
            bad = u;
            break;
          }
        }
        // part_strong failed, so some pair is unreachable
        for (int e = st.forced + 1; e < m_; ++e)
          if (reach[arcs_[e].from] && !reach[arcs_[e].to] && arc_candidate(st, e))
            cands.push_back(e);
      }
    }
    std::sort(cands.begin(), cands.end());
    for (int e : cands) {
      if (!add_arc(st, e)) continue;
      if (grow(slot, st)) return true;
      remove_arc(st, e);
    }
    return false;
  }

  bool commit_and_recurse(int slot, PartState& st) {
    std::vector<Vertex> committed_verts;
    for (Vertex v : st.z)
      if (!in_s_[v]) {
        vert_used_[v] = 1;
        committed_verts.push_back(v);
      }
    for (int e : st.part) arc_used_[e] = 1;

    std::vector<Arc> part_arcs;
    part_arcs.reserve(st.part.size());
    for (int e : st.part) part_arcs.push_back(arcs_[e]);
    std::sort(part_arcs.begin(), part_arcs.end());
    std::vector<Vertex> verts = st.z;
    parts_.push_back(Subdigraph{VertexSet(std::move(verts)), std::move(part_arcs)});

    if (solve(slot + 1, st.forced + 1)) return true;

    parts_.pop_back();
    for (int e : st.part) arc_used_[e] = 0;
    for (Vertex v : committed_verts) vert_used_[v] = 0;
    return false;
  }

  const Digraph& d_;
  const std::vector<Arc>& arcs_;
  int n_, m_, ell_;
  VertexSet s_;
  std::vector<char> in_s_;
  std::vector<std::vector<int>> out_ids_, in_ids_;
  std::vector<char> arc_used_, vert_used_;
  std::vector<Subdigraph> parts_;
  bool memo_enabled_ = false;
  std::unordered_set<StateKey, StateKeyHash> failed_;
};

int degree_upper_bound(const Digraph& d, const VertexSet& s) {
  int ub = d.arc_count();
  for (Vertex v : s) ub = std::min({ub, d.out_degree(v), d.in_degree(v)});
  return ub;
}

// Largest packing size up to `cap`, walking ell upward.
std::pair<int, std::optional<Packing>> best_up_to(const Digraph& d, const VertexSet& s, int cap) {
  int value = 0;
  std::optional<Packing> cert = Packing{d, s, {}};
  cap = std::min(cap, degree_upper_bound(d, s));
  for (int ell = 1; ell <= cap; ++ell) {
    auto found = PackingSearch(d, s, ell).run();
    if (!found) break;
    value = ell;
    cert = std::move(found);
  }
  return {value, std::move(cert)};
}

}  // namespace

std::optional<Packing> decide_kappa_s_at_least(const Digraph& d, const VertexSet& s, int ell,
                                               const OracleLimits& limits) {
  check_guard(d, limits);
  check_anchor(d, s);
  if (ell < 0) throw Error("invalid-ell", "negative part count");
  if (ell == 0) return Packing{d, s, {}};
  if (ell > degree_upper_bound(d, s)) return std::nullopt;
  return PackingSearch(d, s, ell).run();
}

KappaResult kappa_s(const Digraph& d, const VertexSet& s, const OracleLimits& limits) {
  check_guard(d, limits);
  check_anchor(d, s);
  auto [value, cert] = best_up_to(d, s, d.arc_count());
  return KappaResult{value, std::move(cert), std::nullopt};
}

KappaResult kappa_k(const Digraph& d, int k, const OracleLimits& limits) {
  check_guard(d, limits);
  if (k < 2 || k > d.order())
    throw Error("invalid-k", "k must satisfy 2 <= k <= n, got " + std::to_string(k));

  if (!is_strong(d)) {
    // some k-subset meets two strong components, so the minimum is 0
    auto comps = strong_components(d);
    std::vector<char> comp0(d.order(), 0);
    for (Vertex v : comps[0]) comp0[v] = 1;
    std::vector<Vertex> witness{comps[0].members()[0]};
    for (Vertex v = 0; v < d.order() && static_cast<int>(witness.size()) < k; ++v)
      if (!comp0[v]) {
        witness.push_back(v);
        break;
      }
    for (Vertex v = 0; v < d.order() && static_cast<int>(witness.size()) < k; ++v)
      if (std::find(witness.begin(), witness.end(), v) == witness.end()) witness.push_back(v);
    VertexSet ws(std::move(witness));
    return KappaResult{0, Packing{d, ws, {}}, ws};
  }

  KappaResult best;
  best.value = -1;
  std::vector<Vertex> pick(k);
  // lexicographic k-combinations of 0..n-1
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    VertexSet s(pick);
    if (best.value == -1) {
      auto [value, cert] = best_up_to(d, s, d.arc_count());
      best = {value, std::move(cert), s};
    } else if (best.value >= 1) {
      // does this subset go below the current minimum?
      if (!PackingSearch(d, s, best.value).run()) {
        auto [value, cert] = best_up_to(d, s, best.value - 1);
        best = {value, std::move(cert), s};
      }
    }
    if (best.value <= 1) break;  // d is strong, so every subset reaches 1

    int i = k - 1;
    while (i >= 0 && pick[i] == d.order() - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace strongsub
