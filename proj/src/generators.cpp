#include "strongsub/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace strongsub {

namespace {

constexpr int kRejectionRounds = 64;

std::vector<Vertex> shuffled_ids(Rng& rng, int n) {
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  return ids;
}

Digraph sample_digraph(Rng& rng, int n, double arc_probability) {
  std::bernoulli_distribution coin(arc_probability);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

UndirectedGraph sample_graph(Rng& rng, int n, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return UndirectedGraph(n, std::move(edges));
}

bool is_connected(const UndirectedGraph& g) {
  const int n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::find(seen.begin(), seen.end(), 0) == seen.end();
}

}  // namespace

Digraph random_strong_digraph(Rng& rng, int n, double arc_probability) {
  if (n < 1) throw Error("invalid-order", "need at least one vertex");
  Digraph d;
  for (int round = 0; round < kRejectionRounds; ++round) {
    d = sample_digraph(rng, n, arc_probability);
    if (is_strong(d)) return d;
  }
  // Repair: overlay a random Hamiltonian cycle on the last sample.
  const std::vector<Vertex> order = shuffled_ids(rng, n);
  std::set<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (int i = 0; i < n; ++i) {
    const Vertex u = order[i];
    const Vertex v = order[(i + 1) % n];
    if (u != v) arcs.insert({u, v});
  }
  return Digraph(n, std::vector<Arc>(arcs.begin(), arcs.end()));
}

UndirectedGraph random_connected_graph(Rng& rng, int n, double edge_probability) {
  if (n < 1) throw Error("invalid-order", "need at least one vertex");
  UndirectedGraph g;
  for (int round = 0; round < kRejectionRounds; ++round) {
    g = sample_graph(rng, n, edge_probability);
    if (is_connected(g)) return g;
  }
  // Repair: overlay a random spanning tree on the last sample.
  const std::vector<Vertex> order = shuffled_ids(rng, n);
  std::set<std::pair<Vertex, Vertex>> edges(g.edges().begin(), g.edges().end());
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const Vertex u = order[pick(rng)];
    const Vertex v = order[i];
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  return UndirectedGraph(n, std::vector<std::pair<Vertex, Vertex>>(edges.begin(), edges.end()));
}

Digraph random_strong_semicomplete(Rng& rng, int n, double two_cycle_probability) {
  if (n < 1) throw Error("invalid-order", "need at least one vertex");
  std::bernoulli_distribution digon(two_cycle_probability);
  std::bernoulli_distribution flip(0.5);
  for (int round = 0; round < kRejectionRounds; ++round) {
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (digon(rng)) {
          arcs.push_back({u, v});
          arcs.push_back({v, u});
        } else if (flip(rng)) {
          arcs.push_back({u, v});
        } else {
          arcs.push_back({v, u});
        }
      }
    }
    Digraph d(n, std::move(arcs));
    if (is_strong(d)) return d;
  }
  // Repair: the complete biorientation is strong and semicomplete.
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph random_strong_symmetric(Rng& rng, int n, double edge_probability) {
  return biorient(random_connected_graph(rng, n, edge_probability));
}

Linkage2Instance random_linkage2(Rng& rng, int n, double arc_probability) {
  if (n < 4) throw Error("invalid-order", "need four distinct terminals");
  Linkage2Instance instance;
  instance.host = sample_digraph(rng, n, arc_probability);
  const std::vector<Vertex> ids = shuffled_ids(rng, n);
  instance.s1 = ids[0];
  instance.t1 = ids[1];
  instance.s2 = ids[2];
  instance.t2 = ids[3];
  return instance;
}

CLLMInstance random_cllm(Rng& rng, int q, double edge_probability, bool plant) {
  if (q < 1) throw Error("invalid-order", "need at least one triple");
  const std::vector<Vertex> ids = shuffled_ids(rng, 3 * q);
  CLLMInstance instance;
  instance.u_class.assign(ids.begin(), ids.begin() + q);
  instance.v_class.assign(ids.begin() + q, ids.begin() + 2 * q);
  instance.w_class.assign(ids.begin() + 2 * q, ids.end());

  std::bernoulli_distribution coin(edge_probability);
  std::set<std::pair<Vertex, Vertex>> edges;
  auto cross = [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex x : a) {
      for (Vertex y : b) {
        if (coin(rng)) edges.insert({std::min(x, y), std::max(x, y)});
      }
    }
  };
  cross(instance.u_class, instance.v_class);
  cross(instance.u_class, instance.w_class);
  cross(instance.v_class, instance.w_class);

  if (plant) {
    const std::vector<Vertex> vperm = shuffled_ids(rng, q);
    const std::vector<Vertex> wperm = shuffled_ids(rng, q);
    for (int i = 0; i < q; ++i) {
      const Vertex u = instance.u_class[i];
      const Vertex v = instance.v_class[vperm[i]];
      const Vertex w = instance.w_class[wperm[i]];
      edges.insert({std::min(u, v), std::max(u, v)});
      edges.insert({std::min(v, w), std::max(v, w)});
    }
  }
  instance.graph = UndirectedGraph(
      3 * q, std::vector<std::pair<Vertex, Vertex>>(edges.begin(), edges.end()));
  return instance;
}

}  // namespace strongsub
