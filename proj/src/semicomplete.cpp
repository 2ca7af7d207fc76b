#include "strongsub/semicomplete.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strongsub/linkage.hpp"
#include "strongsub/partitions.hpp"

namespace strongsub {

namespace {

// Strong-component structure of one seed inside the host.
struct SeedShape {
  std::vector<std::vector<Vertex>> comps;  // host ids, condensation sources first
  std::vector<int> initial;                // comp indices with no in-arc from a sibling
  std::vector<int> terminal;               // comp indices with no out-arc to a sibling
  bool strong() const { return comps.size() == 1; }
  bool well_formed() const { return initial.size() == 1 && terminal.size() == 1; }
};

SeedShape analyze_seed(const Digraph& host, const VertexSet& seed) {
  const Subdigraph sub = induced_subdigraph(host, seed);
  const std::vector<Vertex>& verts = sub.vertices.members();
  auto local_id = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<Arc> local_arcs;
  for (const Arc& a : sub.arcs) local_arcs.push_back({local_id(a.from), local_id(a.to)});
  const Digraph local(static_cast<int>(verts.size()), std::move(local_arcs));

  SeedShape shape;
  for (const VertexSet& c : strong_components(local)) {
    std::vector<Vertex> members;
    for (Vertex v : c) members.push_back(verts[v]);
    std::sort(members.begin(), members.end());
    shape.comps.push_back(std::move(members));
  }
  const int r = static_cast<int>(shape.comps.size());
  std::vector<int> comp_of(verts.size(), -1);
  for (int c = 0; c < r; ++c)
    for (Vertex v : shape.comps[c]) comp_of[local_id(v)] = c;
  std::vector<char> has_in(r, 0), has_out(r, 0);
  for (const Arc& a : sub.arcs) {
    const int cu = comp_of[local_id(a.from)], cv = comp_of[local_id(a.to)];
    if (cu == cv) continue;
    has_out[cu] = 1;
    has_in[cv] = 1;
  }
  for (int c = 0; c < r; ++c) {
    if (!has_in[c]) shape.initial.push_back(c);
    if (!has_out[c]) shape.terminal.push_back(c);
  }
  return shape;
}

// Solves extension when every seed has a unique initial and a unique
// terminal component: strong seeds are frozen and removed; each remaining
// seed contracts its components, picks an ordered selection of interior
// components bracketed by the terminal and the initial one, and asks for
// vertex-disjoint paths stitching consecutive selections together. Interior
// selections are duplicated into an out-copy and an in-copy so a component
// can close one gap on each side without offering a shortcut through itself.
class WellformedSolver {
 public:
  WellformedSolver(const Digraph& host, const std::vector<VertexSet>& seeds)
      : host_(host), seeds_(seeds) {}

  std::optional<std::vector<VertexSet>> solve() {
    const int ell = static_cast<int>(seeds_.size());
    for (int i = 0; i < ell; ++i) {
      shapes_.push_back(analyze_seed(host_, seeds_[i]));
      if (!shapes_[i].well_formed()) return std::nullopt;
    }
    in_seed_.assign(host_.order(), -1);
    comp_of_.assign(host_.order(), -1);
    for (int i = 0; i < ell; ++i)
      for (int c = 0; c < static_cast<int>(shapes_[i].comps.size()); ++c)
        for (Vertex v : shapes_[i].comps[c]) {
          in_seed_[v] = i;
          comp_of_[v] = c;
        }
    for (int i = 0; i < ell; ++i) menus_.push_back(subsequence_menu(shapes_[i]));
    std::vector<std::vector<int>> chosen(ell);
    return iterate(chosen, 0);
  }

 private:
  // All component sequences to try for one seed: terminal component first,
  // then any ordered arrangement of any interior subset, the initial
  // component last. A strong seed contributes the single empty sequence.
  static std::vector<std::vector<int>> subsequence_menu(const SeedShape& shape) {
    if (shape.strong()) return {{}};
    const int t = shape.terminal[0];
    const int ini = shape.initial[0];
    std::vector<int> interior;
    for (int c = 0; c < static_cast<int>(shape.comps.size()); ++c)
      if (c != t && c != ini) interior.push_back(c);
    const int m = static_cast<int>(interior.size());
    if (m > 20) throw Error("size-guard", "too many seed components to enumerate");
    std::vector<std::vector<int>> menu;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> subset;
      for (int j = 0; j < m; ++j)
        if (mask & (1u << j)) subset.push_back(interior[j]);
      std::sort(subset.begin(), subset.end());
      do {
        std::vector<int> seq;
        seq.push_back(t);
        seq.insert(seq.end(), subset.begin(), subset.end());
        seq.push_back(ini);
        menu.push_back(std::move(seq));
      } while (std::next_permutation(subset.begin(), subset.end()));
    }
    return menu;
  }

  std::optional<std::vector<VertexSet>> iterate(std::vector<std::vector<int>>& chosen, int i) {
    if (i == static_cast<int>(menus_.size())) return attempt(chosen);
    for (const std::vector<int>& seq : menus_[i]) {
      chosen[i] = seq;
      if (auto got = iterate(chosen, i + 1)) return got;
    }
    return std::nullopt;
  }

  std::optional<std::vector<VertexSet>> attempt(const std::vector<std::vector<int>>& chosen) {
    const int ell = static_cast<int>(seeds_.size());
    const int n = host_.order();

    std::vector<Vertex> node_host;  // backing host vertex for free nodes, -1 otherwise
    auto add_node = [&](Vertex hostv) {
      node_host.push_back(hostv);
      return static_cast<int>(node_host.size()) - 1;
    };
    // out_of/in_of resolve a host vertex to the node emitting/absorbing its
    // arcs; removed vertices resolve to -1.
    std::vector<int> out_of(n, -1), in_of(n, -1);
    for (Vertex v = 0; v < n; ++v)
      if (in_seed_[v] < 0) out_of[v] = in_of[v] = add_node(v);

    struct NodePair {
      int out = -1;
      int in = -1;
    };
    std::vector<std::vector<NodePair>> comp_nodes(ell);
    for (int i = 0; i < ell; ++i) {
      comp_nodes[i].assign(shapes_[i].comps.size(), {});
      const std::vector<int>& seq = chosen[i];
      const int r = static_cast<int>(seq.size());
      for (int a = 0; a < r; ++a) {
        NodePair& np = comp_nodes[i][seq[a]];
        if (a == 0 || a == r - 1) {
          np.out = np.in = add_node(-1);
        } else {
          np.out = add_node(-1);
          np.in = add_node(-1);
        }
        for (Vertex v : shapes_[i].comps[seq[a]]) {
          out_of[v] = np.out;
          in_of[v] = np.in;
        }
      }
    }

    std::set<Arc> link_arcs;
    for (const Arc& a : host_.arcs()) {
      if (in_seed_[a.from] >= 0 && in_seed_[a.from] == in_seed_[a.to] &&
          comp_of_[a.from] == comp_of_[a.to])
        continue;  // arc inside one contracted component
      const int from = out_of[a.from], to = in_of[a.to];
      if (from < 0 || to < 0) continue;
      link_arcs.insert({from, to});
    }

    TerminalSequence terms;
    std::vector<int> pair_seed;
    for (int i = 0; i < ell; ++i) {
      const std::vector<int>& seq = chosen[i];
      for (size_t a = 0; a + 1 < seq.size(); ++a) {
        terms.pairs.push_back({comp_nodes[i][seq[a]].out, comp_nodes[i][seq[a + 1]].in});
        pair_seed.push_back(i);
      }
    }

    const Digraph link(static_cast<int>(node_host.size()),
                       std::vector<Arc>(link_arcs.begin(), link_arcs.end()));
    const auto routed = directed_linkage(link, terms);
    if (!routed) return std::nullopt;

    std::vector<std::vector<Vertex>> grown(ell);
    for (int i = 0; i < ell; ++i) grown[i].assign(seeds_[i].begin(), seeds_[i].end());
    for (size_t p = 0; p < routed->paths.size(); ++p) {
      const std::vector<Vertex>& path = routed->paths[p];
      for (size_t j = 1; j + 1 < path.size(); ++j) {
        // Contracted nodes are all terminals, so interior path vertices are
        // free nodes backed by real host vertices.
        if (node_host[path[j]] < 0)
          throw Error("internal-error", "path routed through a contracted node");
        grown[pair_seed[p]].push_back(node_host[path[j]]);
      }
    }
    std::vector<VertexSet> zs;
    for (int i = 0; i < ell; ++i) {
      VertexSet z(grown[i]);
      if (!is_strong_subset(host_, z.members()))
        throw Error("internal-error", "grown seed is not strong");
      zs.push_back(std::move(z));
    }
    return zs;
  }

  const Digraph& host_;
  const std::vector<VertexSet>& seeds_;
  std::vector<SeedShape> shapes_;
  std::vector<int> in_seed_, comp_of_;
  std::vector<std::vector<std::vector<int>>> menus_;
};

// Distinct vertex sets obtainable by giving every initial component an
// in-neighbor and every terminal component an out-neighbor, drawing from the
// unblocked vertices with repetition allowed. Choices differing only in
// which slot picked which vertex collapse to the same set.
std::vector<std::vector<Vertex>> helper_sets(const Digraph& host, const SeedShape& shape,
                                             const std::vector<char>& blocked) {
  std::vector<std::vector<Vertex>> slot_cands;
  auto gather = [&](const std::vector<Vertex>& comp, bool into) {
    std::vector<Vertex> cands;
    for (Vertex v = 0; v < host.order(); ++v) {
      if (blocked[v]) continue;
      for (Vertex u : comp) {
        if (into ? host.has_arc(v, u) : host.has_arc(u, v)) {
          cands.push_back(v);
          break;
        }
      }
    }
    return cands;
  };
  for (int c : shape.initial) slot_cands.push_back(gather(shape.comps[c], true));
  for (int c : shape.terminal) slot_cands.push_back(gather(shape.comps[c], false));
  for (const std::vector<Vertex>& cands : slot_cands)
    if (cands.empty()) return {};

  std::vector<Vertex> universe;
  for (const std::vector<Vertex>& cands : slot_cands)
    universe.insert(universe.end(), cands.begin(), cands.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.size() > 63) throw Error("size-guard", "too many helper candidates");
  std::map<Vertex, int> pos;
  for (size_t j = 0; j < universe.size(); ++j) pos[universe[j]] = static_cast<int>(j);

  std::set<std::pair<int, std::uint64_t>> seen;
  std::set<std::uint64_t> unions;
  std::function<void(size_t, std::uint64_t)> walk = [&](size_t slot, std::uint64_t mask) {
    if (slot == slot_cands.size()) {
      unions.insert(mask);
      return;
    }
    if (!seen.insert({static_cast<int>(slot), mask}).second) return;
    for (Vertex v : slot_cands[slot]) walk(slot + 1, mask | (std::uint64_t{1} << pos[v]));
  };
  walk(0, 0);

  std::vector<std::vector<Vertex>> result;
  for (std::uint64_t mask : unions) {
    std::vector<Vertex> set;
    for (size_t j = 0; j < universe.size(); ++j)
      if (mask & (std::uint64_t{1} << j)) set.push_back(universe[j]);
    result.push_back(std::move(set));
  }
  return result;
}

std::optional<std::vector<VertexSet>> extend_and_solve(const Digraph& host,
                                                       const std::vector<VertexSet>& seeds,
                                                       const std::vector<SeedShape>& shapes,
                                                       std::vector<VertexSet>& grown,
                                                       std::vector<char>& blocked, int i) {
  if (i == static_cast<int>(seeds.size())) {
    for (const VertexSet& g : grown)
      if (!analyze_seed(host, g).well_formed())
        throw Error("internal-error", "helper extension left an ill-formed seed");
    return WellformedSolver(host, grown).solve();
  }
  if (shapes[i].well_formed()) {
    grown.push_back(seeds[i]);
    auto got = extend_and_solve(host, seeds, shapes, grown, blocked, i + 1);
    grown.pop_back();
    return got;
  }
  for (const std::vector<Vertex>& helpers : helper_sets(host, shapes[i], blocked)) {
    std::vector<Vertex> joined(seeds[i].begin(), seeds[i].end());
    joined.insert(joined.end(), helpers.begin(), helpers.end());
    grown.push_back(VertexSet(joined));
    for (Vertex v : helpers) blocked[v] = 1;
    auto got = extend_and_solve(host, seeds, shapes, grown, blocked, i + 1);
    for (Vertex v : helpers) blocked[v] = 0;
    grown.pop_back();
    if (got) return got;
  }
  return std::nullopt;
}

}  // namespace

SplitDigraph build_split(const Digraph& d, const VertexSet& s, const ArcPartition& partition) {
  require_anchor(d, s);
  const int ell = static_cast<int>(partition.cells.size());
  if (ell < 1) throw Error("invalid-ell", "need at least one cell");
  const std::vector<Arc> spanned = anchor_spanned_arcs(d, s);
  const std::set<Arc> wanted(spanned.begin(), spanned.end());
  std::set<Arc> assigned;
  for (const std::vector<Arc>& cell : partition.cells) {
    for (const Arc& a : cell) {
      if (!wanted.count(a)) throw Error("invalid-partition", "cell arc not spanned by the anchor");
      if (!assigned.insert(a).second) throw Error("invalid-partition", "arc assigned to two cells");
    }
  }
  if (assigned.size() != wanted.size())
    throw Error("invalid-partition", "cells miss a spanned arc");

  const int n = d.order();
  const int k = s.size();
  const int outside = n - k;
  std::vector<int> out_id(n, -1), anchor_pos(n, -1);
  {
    int next = 0;
    for (Vertex v = 0; v < n; ++v)
      if (!s.contains(v)) out_id[v] = next++;
    int a = 0;
    for (Vertex v : s) anchor_pos[v] = a++;
  }
  auto copy_id = [&](int cell, int apos) { return outside + cell * k + apos; };

  std::vector<Vertex> original(outside + ell * k, -1);
  for (Vertex v = 0; v < n; ++v)
    if (out_id[v] >= 0) original[out_id[v]] = v;
  for (int i = 0; i < ell; ++i) {
    int a = 0;
    for (Vertex v : s) original[copy_id(i, a++)] = v;
  }

  std::vector<Arc> arcs;
  for (const Arc& arc : d.arcs()) {
    const bool from_s = s.contains(arc.from), to_s = s.contains(arc.to);
    if (!from_s && !to_s) {
      arcs.push_back({out_id[arc.from], out_id[arc.to]});
    } else if (from_s && !to_s) {
      for (int i = 0; i < ell; ++i)
        arcs.push_back({copy_id(i, anchor_pos[arc.from]), out_id[arc.to]});
    } else if (!from_s && to_s) {
      for (int i = 0; i < ell; ++i)
        arcs.push_back({out_id[arc.from], copy_id(i, anchor_pos[arc.to])});
    }
  }
  for (int i = 0; i < ell; ++i)
    for (const Arc& a : partition.cells[i])
      arcs.push_back({copy_id(i, anchor_pos[a.from]), copy_id(i, anchor_pos[a.to])});

  SplitDigraph split;
  split.graph = Digraph(outside + ell * k, std::move(arcs));
  split.original = std::move(original);
  for (int i = 0; i < ell; ++i) {
    std::vector<Vertex> seed;
    for (int a = 0; a < k; ++a) seed.push_back(copy_id(i, a));
    split.seeds.push_back(std::move(seed));
  }
  return split;
}

std::optional<std::vector<VertexSet>> strong_extension_packing(const ExtensionInstance& instance) {
  const Digraph& host = instance.host;
  const int n = host.order();
  if (instance.seeds.empty()) return std::vector<VertexSet>{};
  std::vector<char> in_any(n, 0);
  for (const VertexSet& seed : instance.seeds) {
    if (seed.empty()) throw Error("invalid-seed", "seed is empty");
    for (Vertex v : seed) {
      if (v < 0 || v >= n) throw Error("invalid-seed", "seed vertex out of range");
      if (in_any[v]) throw Error("invalid-seed", "seeds overlap");
      in_any[v] = 1;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_any[v]) continue;
    for (Vertex w = 0; w < n; ++w) {
      if (w == v || host.has_arc(v, w) || host.has_arc(w, v)) continue;
      throw Error("hypothesis-violation", "vertex " + std::to_string(v) +
                                               " is not adjacent to vertex " + std::to_string(w));
    }
  }
  std::vector<SeedShape> shapes;
  for (const VertexSet& seed : instance.seeds) shapes.push_back(analyze_seed(host, seed));
  std::vector<VertexSet> grown;
  std::vector<char> blocked = in_any;
  return extend_and_solve(host, instance.seeds, shapes, grown, blocked, 0);
}

std::optional<Packing> decide_kappa_s_semicomplete(const Digraph& d, const VertexSet& s, int ell) {
  if (!is_semicomplete(d)) throw Error("not-semicomplete", "the host is not semicomplete");
  require_anchor(d, s);
  if (ell < 0) throw Error("invalid-ell", "negative part count");
  if (ell == 0) return Packing{d, s, {}};
  // Each part spends one private out-arc and in-arc of every anchor vertex.
  for (Vertex v : s)
    if (d.out_degree(v) < ell || d.in_degree(v) < ell) return std::nullopt;

  const std::vector<Arc> spanned = anchor_spanned_arcs(d, s);
  std::optional<Packing> found;
  for_each_cell_assignment(
      static_cast<int>(spanned.size()), ell, [&](const std::vector<int>& assign) {
        ArcPartition partition;
        partition.cells.assign(ell, {});
        for (size_t j = 0; j < spanned.size(); ++j)
          partition.cells[assign[j]].push_back(spanned[j]);
        const SplitDigraph split = build_split(d, s, partition);
        ExtensionInstance instance;
        instance.host = split.graph;
        for (const std::vector<Vertex>& seed : split.seeds)
          instance.seeds.push_back(VertexSet(seed));
        const auto zs = strong_extension_packing(instance);
        if (!zs) return true;

        std::vector<Subdigraph> parts;
        for (const VertexSet& z : *zs) {
          std::vector<char> in_z(split.graph.order(), 0);
          for (Vertex v : z) in_z[v] = 1;
          std::vector<Vertex> verts;
          for (Vertex v : z) verts.push_back(split.original[v]);
          std::vector<Arc> arcs;
          for (const Arc& a : split.graph.arcs())
            if (in_z[a.from] && in_z[a.to])
              arcs.push_back({split.original[a.from], split.original[a.to]});
          std::sort(arcs.begin(), arcs.end());
          parts.push_back(Subdigraph{VertexSet(verts), std::move(arcs)});
        }
        Packing packing{d, s, std::move(parts)};
        if (auto violation = packing_violation(packing))
          throw Error("internal-error", "reconstructed packing violates " + *violation);
        found = std::move(packing);
        return false;
      });
  return found;
}

SubsetDecision decide_kappa_k_semicomplete(const Digraph& d, int k, int ell) {
  if (!is_semicomplete(d)) throw Error("not-semicomplete", "the host is not semicomplete");
  const int n = d.order();
  if (k < 2 || k > n) throw Error("invalid-k", "need 2 <= k <= n");
  if (ell < 0) throw Error("invalid-ell", "negative part count");
  if (ell == 0) return {true, std::nullopt};
  if (!is_strong(d)) return {false, std::nullopt};

  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    const VertexSet s(std::vector<Vertex>(idx.begin(), idx.end()));
    if (!decide_kappa_s_semicomplete(d, s, ell)) return {false, s};
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {true, std::nullopt};
}

}  // namespace strongsub
