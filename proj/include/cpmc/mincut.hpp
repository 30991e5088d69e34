#pragma once

#include <optional>
#include <vector>

#include "cpmc/graph.hpp"

namespace cpmc {

enum class CutKind { Edge, Node };

// Iteration order of adjacency lists inside the flow solver.  Reversing
// it reorders every search without changing the answer on perturbed
// inputs; tests use that to confirm cut uniqueness.
enum class AdjacencyOrder { Forward, Reversed };

struct CutResult {
  CutKind kind = CutKind::Edge;
  std::vector<int> elements;      // edge ids or node ids, ascending
  PerturbedWeight total;          // Infinite means no finite cut exists
  std::vector<NodeId> source_side;  // component certificate, ascending
  bool finite() const { return !total.is_infinite(); }
};

// Minimum weight edge set whose deletion separates t from s.
// Exact augmenting-path max-flow over PerturbedWeight capacities.
CutResult min_edge_cut(const Graph& g, NodeId s, NodeId t,
                       AdjacencyOrder order = AdjacencyOrder::Forward);

// Minimum weight node set (excluding s, t) whose deletion separates t
// from s.  Standard node splitting; s and t stay unsplit, so an s-t edge
// makes the result Infinite.
CutResult min_node_cut(const Graph& g, NodeId s, NodeId t,
                       AdjacencyOrder order = AdjacencyOrder::Forward);

// Cut separating t from all of source_set (plus extra, if given) at
// once: a dummy node is tied to each of them with Infinite edges and cut
// against t.  For node cuts the source_set nodes also get Infinite
// weight, so they can never be cut themselves.  Elements and the
// source-side certificate are reported in terms of g (dummy stripped).
// When the protected nodes span a connected subgraph of g the
// certificate is a single component of g.
CutResult min_cut_from_set(const Graph& g, const std::vector<NodeId>& source_set,
                           std::optional<NodeId> extra, NodeId t, CutKind kind,
                           AdjacencyOrder order = AdjacencyOrder::Forward);

}  // namespace cpmc
