#ifndef STRONGSUB_EXTREMAL_HPP
#define STRONGSUB_EXTREMAL_HPP

#include <optional>
#include <vector>

#include "strongsub/digraph.hpp"
#include "strongsub/packing.hpp"

namespace strongsub {

// n-1 arc-disjoint directed Hamiltonian cycles covering every arc of the
// complete biorientation of K_n. Each cycle is listed by its n vertices in
// traversal order, starting at vertex 0.
struct HamiltonianDecomposition {
  int n = 0;
  std::vector<std::vector<Vertex>> cycles;
};

// Exhaustive backtracking for a decomposition, seeded with rotation-style
// cycles (i -> i+c) which settle every prime n immediately. Results are
// cached per n. Returns nullopt exactly when no decomposition exists, which
// the search establishes by exhaustion (n = 4 and n = 6 are the only such
// cases in range). Throws "invalid-n" for n < 2.
std::optional<HamiltonianDecomposition> hamiltonian_decomposition(int n);

// Full structural audit: n-1 cycles, each Hamiltonian, pairwise arc-disjoint,
// jointly covering all n(n-1) arcs.
bool validate_decomposition(const HamiltonianDecomposition& dec);

// Closed-form value of kappa_k on the complete biorientation of K_n:
// n-1 in general, n-2 for k in {4,6}. Throws "invalid-k" unless 2 <= k <= n.
int kappa_complete_biorientation(int n, int k);

// Blueprint for an optimal packing on a complete biorientation: inner parts
// confined to the anchor plus one in/out star per outside vertex.
struct KnPackingPlan {
  std::vector<Subdigraph> inner;
  std::vector<Subdigraph> stars;
};

KnPackingPlan kn_packing_plan(int n, const VertexSet& s);

// Optimal packing witnessing kappa_complete_biorientation(n, |s|) on the
// complete biorientation of K_n. Throws "invalid-s" unless 2 <= |s| <= n.
Packing construct_kn_packing(int n, const VertexSet& s);

// (1, min(n-1, min out-degree, min in-degree)); valid lower/upper bounds for
// kappa_k of any strong digraph. Throws "not-strong" otherwise.
std::pair<int, int> bounds(const Digraph& d, int k);

// Does kappa_k(d) attain the ceiling n-1? That happens exactly for complete
// biorientations with k outside {4,6}.
bool is_upper_bound_extremal(const Digraph& d, int k);

}  // namespace strongsub

#endif
