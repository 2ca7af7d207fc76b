#ifndef STRONGSUB_ORACLE_HPP
#define STRONGSUB_ORACLE_HPP

#include <optional>

#include "strongsub/digraph.hpp"
#include "strongsub/packing.hpp"

namespace strongsub {

// The oracle is an exhaustive search; the guard keeps it off instances where
// that is hopeless. Raise max_n (or set force) deliberately.
struct OracleLimits {
  int max_n = 12;
  bool force = false;
};

// Search for `ell` internally disjoint strong sub-digraphs of d that each
// contain s: vertex sets intersect exactly in s, arc sets are disjoint.
// Returns a verified packing, or nullopt when none exists. The search
// assigns arcs to one part at a time, restricts parts to arc-minimal strong
// sub-digraphs, breaks slot symmetry by forcing strictly increasing smallest
// arc indices across parts, and prunes on residual reachability and
// anchor-degree budgets. The first packing found is deterministic.
// Throws "invalid-s" (|s| < 2 or out of range), "invalid-ell", "size-guard".
std::optional<Packing> decide_kappa_s_at_least(const Digraph& d, const VertexSet& s, int ell,
                                               const OracleLimits& limits = {});

// Largest ell for which a packing exists, with a certificate of that size.
KappaResult kappa_s(const Digraph& d, const VertexSet& s, const OracleLimits& limits = {});

// Minimum of kappa_s over every k-subset of vertices, with a minimizing
// subset as witness. Throws "invalid-k" unless 2 <= k <= n.
KappaResult kappa_k(const Digraph& d, int k, const OracleLimits& limits = {});

}  // namespace strongsub

#endif
