#include "strongsub/packing.hpp"

#include <algorithm>
#include <set>

namespace strongsub {

std::optional<std::string> packing_violation(const Packing& p) {
  const Digraph& host = p.base;
  for (Vertex v : p.anchor)
    if (v < 0 || v >= host.order()) throw Error("host-mismatch", "anchor vertex outside host");
  for (const Subdigraph& part : p.parts) {
    for (Vertex v : part.vertices)
      if (v < 0 || v >= host.order()) throw Error("host-mismatch", "part vertex outside host");
    for (const Arc& a : part.arcs) {
      if (!host.has_arc(a.from, a.to)) throw Error("host-mismatch", "part arc absent from host");
      if (!part.vertices.contains(a.from) || !part.vertices.contains(a.to))
        throw Error("host-mismatch", "part arc endpoint outside part vertex set");
    }
  }

  for (const Subdigraph& part : p.parts) {
    for (Vertex v : p.anchor)
      if (!part.vertices.contains(v)) return "anchor-missing";
    // strongness of the part as a standalone digraph
    std::vector<Vertex> verts = part.vertices.members();
    std::vector<int> pos(host.order(), -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
    std::vector<Arc> local;
    local.reserve(part.arcs.size());
    for (const Arc& a : part.arcs) local.push_back({pos[a.from], pos[a.to]});
    if (!is_strong(Digraph(static_cast<int>(verts.size()), std::move(local))))
      return "part-not-strong";
  }

  for (size_t i = 0; i < p.parts.size(); ++i) {
    for (size_t j = i + 1; j < p.parts.size(); ++j) {
      for (Vertex v : p.parts[i].vertices)
        if (p.parts[j].vertices.contains(v) && !p.anchor.contains(v)) return "vertex-overlap";
      std::set<Arc> arcs_i(p.parts[i].arcs.begin(), p.parts[i].arcs.end());
      for (const Arc& a : p.parts[j].arcs)
        if (arcs_i.count(a)) return "arc-overlap";
    }
  }
  return std::nullopt;
}

bool verify_packing(const Packing& p) { return !packing_violation(p).has_value(); }

std::vector<Arc> anchor_spanned_arcs(const Digraph& d, const VertexSet& s) {
  std::vector<Arc> spanned;
  for (const Arc& a : d.arcs())
    if (s.contains(a.from) && s.contains(a.to)) spanned.push_back(a);
  return spanned;
}

void require_anchor(const Digraph& d, const VertexSet& s) {
  if (s.size() < 2) throw Error("invalid-s", "anchor needs at least two vertices");
  for (Vertex v : s)
    if (v < 0 || v >= d.order())
      throw Error("invalid-s", "anchor vertex " + std::to_string(v) + " out of range");
}

}  // namespace strongsub
