#pragma once

#include <optional>
#include <vector>

#include "cpmc/embedding.hpp"
#include "cpmc/instance.hpp"
#include "cpmc/solver.hpp"

namespace cpmc {

// How a candidate path from a to b is judged against face C.
//
// AboveArc is the standalone convention: the path plus the outer-walk
// arc between its endpoints encloses a region, and C must be inside it
// (face_side_of_path).  Intermediate path nodes must stay off the outer
// face.
//
// WithOuterFace closes the curve with one designated edge instead of the
// arc: joining faces across every edge that is neither on the path nor
// closure_edge must leave C's class containing the outer face.
// Intermediates are unrestricted.  This is the form the cut solver needs
// in the dual, where it reads "s2 still reaches s1 across the cut".
enum class SideRule { AboveArc, WithOuterFace };

struct LcspQuery {
  NodeId a = -1;
  NodeId b = -1;   // both endpoints on the outer face boundary
  int face_c = -1;
  SideRule rule = SideRule::AboveArc;
  EdgeId closure_edge = -1;  // WithOuterFace only
};

struct ConstrainedPath {
  std::vector<NodeId> nodes;  // a first, b last
  std::vector<EdgeId> edges;  // one per hop (ids, so parallel edges stay distinct)
  PerturbedWeight total;
  std::vector<int> side_witness;  // C's face class under the rule, ascending
};

// PreconditionError unless the query is well-posed: distinct endpoints
// on the outer face, a valid constrained face (not the outer one under
// AboveArc), and a closure edge under WithOuterFace.
void validate_lcsp_query(const Graph& g, const Embedding& emb, const LcspQuery& q);

// True when the given simple path satisfies the query's side rule.
// Checks the rule only; simplicity and the intermediate-node restriction
// are the caller's business.
bool lcsp_feasible(const Graph& g, const Embedding& emb, const LcspQuery& q,
                   const std::vector<EdgeId>& path_edges);

// C's face class under the rule for the given path: faces reachable from
// face_c without crossing the path or the rule's closing curve.
std::vector<int> lcsp_side_witness(const Graph& g, const Embedding& emb, const LcspQuery& q,
                                   const std::vector<EdgeId>& path_edges);

// Minimum-total simple path a -> ... -> u -> v -> ... -> b whose hop
// from u to v is exactly edge e in the given direction.  Searches edges
// with alive[e] set (empty mask = all edges), never takes an
// Infinite-weight edge, and never visits a node with forbidden[] set
// except as a or b.  Exact: enumerates the a-u leg
// depth-first with lower-bound pruning and closes each with a shortest
// v-b leg on the remaining nodes.  No side filtering.
std::optional<ConstrainedPath> shortest_path_via_directed_edge(
    const Graph& g, NodeId a, NodeId b, EdgeId e, bool reversed,
    const std::vector<bool>& alive = {}, const std::vector<bool>& forbidden = {});

// Exact side-constrained shortest path.  Rounds enlarge face C by
// absorbing its boundary edges; each round collects candidate paths
// through both directions of every current boundary edge and keeps the
// feasible ones.  Once C's class reaches the outer face the rounds stop
// and a best-first search over the full graph, pruned by the best
// candidate so far, settles the optimum.  none if no feasible path.
std::optional<ConstrainedPath> solve_lcsp(const Graph& g, const Embedding& emb,
                                          const LcspQuery& q);

// Minimum-weight edge cut separating t from s1 that keeps s1-s2
// connected, for s1 and t on a common face.  An uncuttable s1-t edge is
// drawn inside that face; in the dual of the augmented graph the valid
// cuts are exactly the WithOuterFace-feasible simple paths between the
// two faces flanking the new edge, so the cheapest such path maps back
// to the optimal cut.  Needs an embedding; Infinite-total solution when
// infeasible.
CpmcSolution solve_cpmec_same_face(const PlanarInstance& inst);

}  // namespace cpmc
