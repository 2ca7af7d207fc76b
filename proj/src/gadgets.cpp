#include "strongsub/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "strongsub/linkage.hpp"
#include "strongsub/oracle.hpp"
#include "strongsub/symmetric.hpp"

namespace strongsub {

namespace {

Digraph add_vertex(const Digraph& d, const std::string& label) {
  std::vector<std::string> labels = d.labels();
  labels.push_back(label);
  return Digraph(d.order() + 1, d.arcs(), labels);
}

Digraph add_arcs(const Digraph& d, const std::vector<Arc>& extra) {
  std::vector<Arc> arcs = d.arcs();
  arcs.insert(arcs.end(), extra.begin(), extra.end());
  return Digraph(d.order(), arcs, d.labels());
}

void validate_terminals(const Linkage2Instance& instance) {
  const int n = instance.host.order();
  const Vertex ts[4] = {instance.s1, instance.t1, instance.s2, instance.t2};
  for (Vertex t : ts) {
    if (t < 0 || t >= n) throw Error("invalid-terminal", "terminal out of range");
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (ts[a] == ts[b]) throw Error("invalid-terminal", "terminals must be distinct");
    }
  }
}

void validate_cllm(const CLLMInstance& instance) {
  const int q = static_cast<int>(instance.u_class.size());
  if (q < 1 || static_cast<int>(instance.v_class.size()) != q ||
      static_cast<int>(instance.w_class.size()) != q) {
    throw Error("invalid-cllm", "classes must be nonempty and equal-sized");
  }
  const int n = instance.graph.order();
  if (n != 3 * q) throw Error("invalid-cllm", "classes must partition the vertices");
  std::vector<int> cls(n, -1);
  auto place = [&](const std::vector<Vertex>& members, int id) {
    for (Vertex v : members) {
      if (v < 0 || v >= n || cls[v] != -1)
        throw Error("invalid-cllm", "classes must partition the vertices");
      cls[v] = id;
    }
  };
  place(instance.u_class, 0);
  place(instance.v_class, 1);
  place(instance.w_class, 2);
  for (const auto& [a, b] : instance.graph.edges()) {
    if (cls[a] == cls[b]) throw Error("invalid-cllm", "edge inside a class");
  }
}

}  // namespace

Gadget linkage_gadget(const Linkage2Instance& instance, int k, int ell) {
  validate_terminals(instance);
  if (k < 2) throw Error("invalid-k", "anchor size must be at least 2");
  if (ell < 2) throw Error("invalid-ell", "part count must be at least 2");

  const Digraph& base = instance.host;
  const int n = base.order();
  std::vector<std::string> labels;
  labels.reserve(n + 2);
  for (int v = 0; v < n; ++v)
    labels.push_back(base.has_labels() ? base.label(v) : "v" + std::to_string(v));
  const Vertex x = n;
  const Vertex y = n + 1;
  labels.push_back("x");
  labels.push_back("y");

  std::vector<Arc> arcs = base.arcs();
  const Arc wiring[] = {{instance.t1, x}, {x, instance.s1}, {instance.t2, y},
                        {y, instance.s2}, {x, instance.s2}, {instance.s2, x},
                        {y, instance.t1}, {instance.t1, y}};
  arcs.insert(arcs.end(), std::begin(wiring), std::end(wiring));
  Digraph g(n + 2, arcs, labels);

  for (int j = 0; j < ell - 2; ++j) {
    g = add_arcs(g, {{x, y}, {y, x}});
    g = subdivide_arc(g, x, y);
    g = subdivide_arc(g, y, x);
  }

  std::vector<Vertex> anchor = {x, y};
  for (int i = 0; i < k - 2; ++i) {
    const Vertex xi = g.order();
    g = add_vertex(g, "x_" + std::to_string(i + 1));
    anchor.push_back(xi);
    for (int j = 0; j < ell; ++j) {
      g = add_arcs(g, {{x, xi}, {xi, x}});
      g = subdivide_arc(g, x, xi);
      g = subdivide_arc(g, xi, x);
    }
  }
  return Gadget{std::move(g), VertexSet(anchor), ell};
}

bool gadget_equivalence_check(const Linkage2Instance& instance, int k, int ell,
                              int max_base_n) {
  if (instance.host.order() > max_base_n)
    throw Error("size-guard", "base instance too large for exhaustive comparison");
  const TerminalSequence terminals{{{instance.s1, instance.t1}, {instance.s2, instance.t2}}};
  const bool linked = directed_linkage(instance.host, terminals).has_value();

  const Gadget gadget = linkage_gadget(instance, k, ell);
  OracleLimits limits;
  limits.force = true;
  const bool packed =
      decide_kappa_s_at_least(gadget.graph, gadget.anchor, gadget.ell, limits).has_value();
  return linked == packed;
}

std::optional<std::vector<std::array<Vertex, 3>>> cllm_solve(const CLLMInstance& instance) {
  validate_cllm(instance);
  const UndirectedGraph& g = instance.graph;
  const int q = static_cast<int>(instance.u_class.size());

  auto connected_triple = [&](Vertex a, Vertex b, Vertex c) {
    int edges = 0;
    if (g.has_edge(a, b)) ++edges;
    if (g.has_edge(a, c)) ++edges;
    if (g.has_edge(b, c)) ++edges;
    return edges >= 2;
  };

  std::vector<int> sigma(q);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<int> tau(q);
    std::iota(tau.begin(), tau.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < q && ok; ++i) {
        ok = connected_triple(instance.u_class[i], instance.v_class[sigma[i]],
                              instance.w_class[tau[i]]);
      }
      if (ok) {
        std::vector<std::array<Vertex, 3>> triples;
        triples.reserve(q);
        for (int i = 0; i < q; ++i) {
          triples.push_back({instance.u_class[i], instance.v_class[sigma[i]],
                             instance.w_class[tau[i]]});
        }
        return triples;
      }
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

Gadget cllm_gadget(const CLLMInstance& instance, int k) {
  validate_cllm(instance);
  if (k < 3) throw Error("invalid-k", "anchor size must be at least 3");
  const int q = static_cast<int>(instance.u_class.size());
  const int base_n = instance.graph.order();

  std::vector<std::string> labels(base_n + k);
  for (int i = 0; i < q; ++i) {
    labels[instance.u_class[i]] = "u" + std::to_string(i);
    labels[instance.v_class[i]] = "v" + std::to_string(i);
    labels[instance.w_class[i]] = "w" + std::to_string(i);
  }

  std::vector<std::pair<Vertex, Vertex>> edges = instance.graph.edges();
  std::vector<Vertex> anchor;
  for (int j = 0; j < k; ++j) {
    const Vertex xj = base_n + j;
    labels[xj] = "x_" + std::to_string(j + 1);
    anchor.push_back(xj);
    const std::vector<Vertex>& side =
        j < k - 2 ? instance.u_class : (j == k - 2 ? instance.v_class : instance.w_class);
    for (Vertex v : side) edges.emplace_back(v, xj);
  }

  std::vector<Arc> arcs;
  arcs.reserve(2 * edges.size());
  for (const auto& [a, b] : edges) {
    arcs.push_back({a, b});
    arcs.push_back({b, a});
  }
  return Gadget{Digraph(base_n + k, arcs, labels), VertexSet(anchor), q};
}

bool cllm_equivalence_check(const CLLMInstance& instance, int k) {
  const bool solvable = cllm_solve(instance).has_value();
  const Gadget gadget = cllm_gadget(instance, k);
  const bool packed =
      decide_kappa_s_symmetric(gadget.graph, gadget.anchor, gadget.ell).has_value();
  return solvable == packed;
}

}  // namespace strongsub
