#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpmc/perturbed_weight.hpp"

namespace cpmc {

using NodeId = int;
using EdgeId = int;

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a query's inputs make the question itself ill-posed
// (duplicate terminals, seed node removed, no shared face, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  NodeId u = -1;
  NodeId v = -1;
  PerturbedWeight weight;
};

enum class PerturbMode { None, Edges, Nodes };

// Undirected multigraph with weighted nodes and edges.  Parallel edges
// are fine, self-loops are not.  Node and edge ids are dense and stable.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int node_count) {
    if (node_count < 0) throw GraphError("negative node count");
    node_weights_.assign(static_cast<std::size_t>(node_count), PerturbedWeight::finite(1));
    incident_.assign(static_cast<std::size_t>(node_count), {});
  }

  NodeId add_node(PerturbedWeight w = PerturbedWeight::finite(1)) {
    node_weights_.push_back(std::move(w));
    incident_.emplace_back();
    return static_cast<NodeId>(node_weights_.size()) - 1;
  }

  EdgeId add_edge(NodeId u, NodeId v, PerturbedWeight w = PerturbedWeight::finite(1)) {
    check_node(u);
    check_node(v);
    if (u == v) throw GraphError("self-loop rejected: node " + std::to_string(u));
    edges_.push_back(Edge{u, v, std::move(w)});
    EdgeId e = static_cast<EdgeId>(edges_.size()) - 1;
    incident_[static_cast<std::size_t>(u)].push_back(e);
    incident_[static_cast<std::size_t>(v)].push_back(e);
    return e;
  }

  int node_count() const { return static_cast<int>(node_weights_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const {
    check_edge(e);
    return edges_[static_cast<std::size_t>(e)];
  }

  const PerturbedWeight& node_weight(NodeId v) const {
    check_node(v);
    return node_weights_[static_cast<std::size_t>(v)];
  }
  void set_node_weight(NodeId v, PerturbedWeight w) {
    check_node(v);
    node_weights_[static_cast<std::size_t>(v)] = std::move(w);
  }
  void set_edge_weight(EdgeId e, PerturbedWeight w) {
    check_edge(e);
    edges_[static_cast<std::size_t>(e)].weight = std::move(w);
  }

  const std::vector<EdgeId>& incident(NodeId v) const {
    check_node(v);
    return incident_[static_cast<std::size_t>(v)];
  }

  int degree(NodeId v) const { return static_cast<int>(incident(v).size()); }

  NodeId other_end(EdgeId e, NodeId v) const {
    const Edge& ed = edge(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw GraphError("edge " + std::to_string(e) + " not incident to node " + std::to_string(v));
  }

  bool has_node(NodeId v) const { return v >= 0 && v < node_count(); }
  bool has_edge(EdgeId e) const { return e >= 0 && e < edge_count(); }

  PerturbMode perturb_mode() const { return perturb_mode_; }
  void set_perturb_mode(PerturbMode m) { perturb_mode_ = m; }

 private:
  void check_node(NodeId v) const {
    if (!has_node(v)) throw GraphError("node id out of range: " + std::to_string(v));
  }
  void check_edge(EdgeId e) const {
    if (!has_edge(e)) throw GraphError("edge id out of range: " + std::to_string(e));
  }

  std::vector<PerturbedWeight> node_weights_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  PerturbMode perturb_mode_ = PerturbMode::None;
};

// Copy of g where element i additionally carries eps^(i+1).  Ranks follow
// element ids, so any two distinct subsets of elements get distinct totals.
Graph perturb(const Graph& g, PerturbMode mode);

// Nodes reachable from seed, honoring removals.  Sorted ascending.
// removed_nodes/removed_edges may be empty or full-size masks.
std::vector<NodeId> connected_component(const Graph& g, NodeId seed,
                                        const std::vector<bool>& removed_nodes = {},
                                        const std::vector<bool>& removed_edges = {});

bool is_connected(const Graph& g);

// Edge ids that are bridges (their removal disconnects the graph).
std::vector<bool> bridge_edges(const Graph& g);

// A node cut separating t from s1 while keeping s1-s2 connected exists
// iff s1 and s2 still share a component once t AND every neighbor of t
// are deleted: a surviving s1-s2 path may not touch a surviving neighbor
// of t (its t-edge would survive too), and conversely everything off
// such a path may be cut.
bool is_feasible_cpmnc(const Graph& g, NodeId s1, NodeId s2, NodeId t);

// An edge cut separating t from s1 while keeping s1-s2 connected exists
// iff s1 and s2 are connected avoiding the node t.
bool is_feasible_cpmec(const Graph& g, NodeId s1, NodeId s2, NodeId t);

void require_distinct_terminals(const Graph& g, NodeId s1, NodeId s2, NodeId t);

}  // namespace cpmc
