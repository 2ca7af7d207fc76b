#ifndef STRONGSUB_GENERATORS_HPP
#define STRONGSUB_GENERATORS_HPP

#include <random>

#include "strongsub/digraph.hpp"
#include "strongsub/gadgets.hpp"

namespace strongsub {

// Test-instance generators. All randomness flows through the caller-owned
// engine, so a fixed seed reproduces the exact instance sequence. Generators
// that promise a structural property (strong, connected) rejection-sample a
// few rounds and then repair the last sample, so they always terminate.
using Rng = std::mt19937;

// Each ordered pair becomes an arc with the given probability; a random
// Hamiltonian cycle is overlaid if rejection sampling fails to hit a strong
// digraph. Requires n >= 1.
Digraph random_strong_digraph(Rng& rng, int n, double arc_probability);

// Each unordered pair becomes an edge with the given probability; a random
// spanning tree is overlaid if rejection fails to hit a connected graph.
// Requires n >= 1.
UndirectedGraph random_connected_graph(Rng& rng, int n, double edge_probability);

// Every unordered pair gets at least one arc: both directions with the given
// probability, otherwise a fair coin picks the orientation. Repairs to a
// complete biorientation if rejection fails to hit a strong digraph.
// Requires n >= 1.
Digraph random_strong_semicomplete(Rng& rng, int n, double two_cycle_probability);

// Complete biorientation of a random connected graph.
Digraph random_strong_symmetric(Rng& rng, int n, double edge_probability);

// Host sampled with the given arc probability plus four distinct random
// terminals. Requires n >= 4.
Linkage2Instance random_linkage2(Rng& rng, int n, double arc_probability);

// Tripartite instance on 3q shuffled vertex ids with inter-class edges drawn
// at the given probability. When `plant` is set, edges completing a random
// system of connected triples are added on top, making the instance
// solvable. Requires q >= 1.
CLLMInstance random_cllm(Rng& rng, int q, double edge_probability, bool plant);

}  // namespace strongsub

#endif
