#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cpmc/graph.hpp"
#include "cpmc/mincut.hpp"

namespace cpmc {

// Weighted set cover: elements 0..n1-1, sets[i] lists the elements of
// set i, weights[i] > 0.
struct SetCoverInstance {
  int n1 = 0;
  std::vector<std::vector<int>> sets;
  std::vector<std::int64_t> weights;
  int k() const { return static_cast<int>(sets.size()); }
};

// PreconditionError on bad element ids, nonpositive weights, or an
// element no set covers.
void validate_set_cover(const SetCoverInstance& sc);

// Node-weighted CPMNC instance encoding a set cover.  One gadget per
// element between consecutive chain endpoints: a parallel internal node
// per owning set.  Every internal node also attaches to its set's hub
// node, each hub attaches to t and weighs w_i * n1 * k.  s1 and s2 are
// the chain extremes, so a valid cut must leave one internal route per
// gadget, whose hubs then have to be cut; the cut base value is
// n1*k*(cover weight) + (internals cut).
struct ReductionArtifact {
  Graph graph;  // unperturbed; edges weight 1, weights live on nodes
  NodeId s1 = -1;
  NodeId s2 = -1;
  NodeId t = -1;
  std::int64_t scale = 0;   // n1 * k
  std::int64_t d1 = 0;      // cover weight bound the budget is built from
  std::int64_t budget = 0;  // n1*k*d1 + n1*k - 1
  std::vector<NodeId> endpoints;  // chain P_0 .. P_n1; s1 = P_0, s2 = P_n1
  std::vector<NodeId> hub_of_set;
  // per element, (set id, internal node), ascending set id
  std::vector<std::vector<std::pair<int, NodeId>>> internals_of_element;
};

// d1 defaults to the sum of all set weights (any cover bound works).
ReductionArtifact build_cpmnc_from_set_cover(const SetCoverInstance& sc,
                                             std::optional<std::int64_t> d1 = std::nullopt);

// Reads a cover off a valid cut of the artifact: the sets whose hub was
// cut.  Any valid cut yields a feasible cover; an optimal cut yields an
// optimal cover of weight cut_base / (n1*k) rounded down.
// PreconditionError if the cut does not actually separate t from s1
// while preserving s1-s2 on the artifact graph.
std::pair<std::vector<int>, std::int64_t> extract_cover(const ReductionArtifact& art,
                                                        const CutResult& cut);

// Unit-weight expansion: every node of base weight c becomes a c-clique,
// edges fan out to whole cliques.  Nodes listed in keep_single (the
// terminals, typically) stay single regardless of weight.  Minimal cuts
// take a clique fully or not at all, so cut values are preserved.
struct UnitWeightGraph {
  Graph graph;
  std::vector<NodeId> original_of;             // unit node -> source node
  std::vector<std::vector<NodeId>> clique_of;  // source node -> unit nodes
};
UnitWeightGraph to_unit_weight(const Graph& g, const std::vector<NodeId>& keep_single = {});

// The artifact graph is bipartite by construction (endpoints and hubs
// against internals and t); this verifies the 2-coloring and returns the
// graph unchanged.  Throws std::logic_error if the construction ever
// stops being bipartite.
Graph to_bipartite(const ReductionArtifact& art);

}  // namespace cpmc
