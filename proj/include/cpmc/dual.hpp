#pragma once

#include <vector>

#include "cpmc/embedding.hpp"
#include "cpmc/graph.hpp"

namespace cpmc {

// Dual of an embedded graph: one node per face, one edge per non-bridge
// primal edge (a bridge has the same face on both sides; its dual
// self-loop is dropped).  Dual edge weights copy the primal edge
// weights.  The dual comes with its own validated embedding: the
// rotation at a face lists the crossed edges in that face's walk order.
//
// Every dual face corresponds to one primal node: with this rotation
// choice, the dual face through the dual dart of primal dart d collects
// precisely the duals of the darts pointing at head(d).  The maps below
// record that correspondence exactly (no geometry, multigraph-safe).
struct DualGraph {
  Graph graph;
  Embedding embedding;
  std::vector<EdgeId> dual_edge_of_primal;  // -1 for bridges
  std::vector<EdgeId> primal_edge_of_dual;
  std::vector<int> dual_face_of_primal_node;  // -1 if every incident edge is a bridge
  std::vector<NodeId> primal_node_of_dual_face;
};

DualGraph build_dual(const Graph& g, const Embedding& emb);

}  // namespace cpmc
