#include "strongsub/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace strongsub {

namespace {

// Next content line, skipping blanks and '#' comments.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::pair<int, std::vector<std::pair<Vertex, Vertex>>> read_pairs(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw Error("bad-edge-list", "missing header line");
  std::istringstream header(line);
  int n = 0, m = 0;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw Error("bad-edge-list", "header must be 'n m'");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (!next_line(in, line))
      throw Error("bad-edge-list", "expected " + std::to_string(m) + " lines, got " +
                                       std::to_string(i));
    std::istringstream row(line);
    Vertex u, v;
    if (!(row >> u >> v)) throw Error("bad-edge-list", "malformed line: " + line);
    pairs.emplace_back(u, v);
  }
  return {n, std::move(pairs)};
}

}  // namespace

Digraph read_digraph(std::istream& in) {
  auto [n, pairs] = read_pairs(in);
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (auto [u, v] : pairs) arcs.push_back({u, v});
  return Digraph(n, std::move(arcs));
}

UndirectedGraph read_undirected(std::istream& in) {
  auto [n, pairs] = read_pairs(in);
  return UndirectedGraph(n, std::move(pairs));
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.from << ' ' << a.to << '\n';
}

void write_undirected(std::ostream& out, const UndirectedGraph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("bad-edge-list", "cannot open " + path);
  return read_digraph(in);
}

UndirectedGraph read_undirected_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("bad-edge-list", "cannot open " + path);
  return read_undirected(in);
}

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex v = 0; v < d.order(); ++v) {
    out << "  " << v;
    if (d.has_labels()) out << " [label=\"" << d.label(v) << "\"]";
    out << ";\n";
  }
  for (const Arc& a : d.arcs()) out << "  " << a.from << " -> " << a.to << ";\n";
  out << "}\n";
  return out.str();
}

void write_packing(std::ostream& out, const Packing& p) {
  out << "anchor:";
  for (Vertex v : p.anchor) out << ' ' << v;
  out << '\n';
  out << "parts: " << p.parts.size() << '\n';
  for (size_t i = 0; i < p.parts.size(); ++i) {
    out << "part " << i << '\n';
    out << "  vertices:";
    for (Vertex v : p.parts[i].vertices) out << ' ' << v;
    out << '\n';
    out << "  arcs:";
    for (const Arc& a : p.parts[i].arcs) out << ' ' << a.from << '>' << a.to;
    out << '\n';
  }
}

Packing read_packing(std::istream& in, const Digraph& host) {
  std::string line;
  auto expect = [&](const std::string& prefix) -> std::string {
    if (!next_line(in, line)) throw Error("bad-packing", "expected '" + prefix + "' line");
    size_t pos = line.find_first_not_of(" \t");
    std::string body = line.substr(pos);
    if (body.rfind(prefix, 0) != 0)
      throw Error("bad-packing", "expected '" + prefix + "', got: " + line);
    return body.substr(prefix.size());
  };

  Packing p{host, {}, {}};
  {
    std::istringstream row(expect("anchor:"));
    std::vector<Vertex> anchor;
    Vertex v;
    while (row >> v) anchor.push_back(v);
    p.anchor = VertexSet(std::move(anchor));
  }
  int count = 0;
  {
    std::istringstream row(expect("parts:"));
    if (!(row >> count) || count < 0) throw Error("bad-packing", "bad part count");
  }
  for (int i = 0; i < count; ++i) {
    expect("part");
    Subdigraph part;
    {
      std::istringstream row(expect("vertices:"));
      std::vector<Vertex> verts;
      Vertex v;
      while (row >> v) verts.push_back(v);
      part.vertices = VertexSet(std::move(verts));
    }
    {
      std::istringstream row(expect("arcs:"));
      std::string token;
      while (row >> token) {
        size_t sep = token.find('>');
        if (sep == std::string::npos) throw Error("bad-packing", "bad arc token: " + token);
        try {
          part.arcs.push_back(
              {std::stoi(token.substr(0, sep)), std::stoi(token.substr(sep + 1))});
        } catch (const std::exception&) {
          throw Error("bad-packing", "bad arc token: " + token);
        }
      }
      std::sort(part.arcs.begin(), part.arcs.end());
    }
    p.parts.push_back(std::move(part));
  }
  return p;
}

}  // namespace strongsub
