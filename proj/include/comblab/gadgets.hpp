#pragma once

#include <cstdint>

#include "comblab/graph.hpp"

namespace comblab {
namespace gadgets {

/// 4 vertices, arcs (0,2),(1,3),(3,0),(2,1); misses 2K2 (the C4 complement)
/// and its dependency digraph is a digon.
OrientedGraph c4_complement_gadget();

/// 5 vertices, arcs (0,3),(1,2),(2,0),(1,4),(4,0),(4,2); misses a chair and
/// one dependency node has out-degree 2.
OrientedGraph chair_gadget();

/// Orientation of the chair (= complement of the co-chair) whose dependency
/// digraph is not a disjoint union of paths; frozen from the deterministic
/// search in derive_co_chair_gadget.
OrientedGraph co_chair_gadget();

/// First orientation mask of the co-chair's complement (canonical pair order)
/// whose dependency digraph fails the disjoint-paths test.
uint64_t derive_co_chair_gadget_mask();

/// 4 vertices, arcs (0,2),(1,3),(3,0); misses P4. Worked example used across
/// the test suites.
OrientedGraph ex_p4();

}  // namespace gadgets

/// Extend d_prime (missing g minus vertex v) to an oriented graph missing g,
/// adding v plus two fresh vertices alpha and beta; the dependency digraph
/// only gains isolated nodes. d_prime vertex i corresponds to the i-th
/// vertex of g other than v. Result vertices, with k = g.size()-1:
/// 0..k-1 = V(d_prime), k = v, k+1 = alpha, k+2 = beta.
OrientedGraph induced_closure_gadget(const OrientedGraph& d_prime, const Graph& g, int v);

}  // namespace comblab
