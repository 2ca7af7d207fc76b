#ifndef STRONGSUB_GRAPH_IO_HPP
#define STRONGSUB_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "strongsub/digraph.hpp"
#include "strongsub/packing.hpp"

namespace strongsub {

// Edge-list format, shared by digraphs and undirected graphs: a header line
// "n m" followed by m lines "u v". Blank lines and lines starting with '#'
// are skipped. Malformed input raises "bad-edge-list".
Digraph read_digraph(std::istream& in);
UndirectedGraph read_undirected(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& d);
void write_undirected(std::ostream& out, const UndirectedGraph& g);

Digraph read_digraph_file(const std::string& path);
UndirectedGraph read_undirected_file(const std::string& path);

// DOT export for visualization; write-only, there is no DOT parser here.
std::string to_dot(const Digraph& d);

// Packing text form: an "anchor:" line, a "parts:" count, then one block per
// part with "vertices:" and "arcs:" lines; arcs are "u>v" tokens. Everything
// is emitted in canonical sorted order. parse raises "bad-packing" on
// malformed text; the host digraph is supplied separately.
void write_packing(std::ostream& out, const Packing& p);
Packing read_packing(std::istream& in, const Digraph& host);

}  // namespace strongsub

#endif
