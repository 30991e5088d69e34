#include "doctest.h"

#include <vector>

#include "cpmc/graph.hpp"

using namespace cpmc;

namespace {

// 0-1-2-3-4 path
Graph path5() {
  Graph g(5);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST_CASE("graph rejects self-loops and bad ids") {
  Graph g(2);
  CHECK_THROWS_AS(g.add_edge(0, 0), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 2), GraphError);
  CHECK_THROWS_AS((void)g.edge(0), GraphError);
  g.add_edge(0, 1);
  g.add_edge(0, 1);  // parallel edges allowed
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(0) == 2);
  CHECK(g.other_end(1, 0) == 1);
}

TEST_CASE("perturb tags element i with eps^(i+1)") {
  Graph g = path5();
  Graph pe = perturb(g, PerturbMode::Edges);
  CHECK(pe.perturb_mode() == PerturbMode::Edges);
  for (EdgeId e = 0; e < pe.edge_count(); ++e) {
    CHECK(pe.edge(e).weight.base() == 1);
    CHECK(pe.edge(e).weight.coeff(e + 1) == 1);
  }
  // node weights untouched
  for (NodeId v = 0; v < pe.node_count(); ++v) CHECK(pe.node_weight(v) == PerturbedWeight::finite(1));

  Graph pn = perturb(g, PerturbMode::Nodes);
  for (NodeId v = 0; v < pn.node_count(); ++v) CHECK(pn.node_weight(v).coeff(v + 1) == 1);
  for (EdgeId e = 0; e < pn.edge_count(); ++e) CHECK(pn.edge(e).weight == PerturbedWeight::finite(1));
}

TEST_CASE("connected_component honors removal masks") {
  Graph g = path5();
  auto all = connected_component(g, 2);
  CHECK(all == std::vector<NodeId>{0, 1, 2, 3, 4});

  std::vector<bool> no_nodes(5, false), no_edges(4, false);
  no_nodes[2] = true;
  CHECK(connected_component(g, 0, no_nodes) == std::vector<NodeId>{0, 1});
  CHECK(connected_component(g, 4, no_nodes) == std::vector<NodeId>{3, 4});
  CHECK_THROWS_AS(connected_component(g, 2, no_nodes), PreconditionError);

  no_edges[1] = true;  // cut edge 1-2
  CHECK(connected_component(g, 0, {}, no_edges) == std::vector<NodeId>{0, 1});
  CHECK(is_connected(g));
}

TEST_CASE("bridge detection distinguishes parallel edges") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  auto b = bridge_edges(g);
  CHECK(b == std::vector<bool>{true, false, false, true});

  Graph cyc(3);
  cyc.add_edge(0, 1);
  cyc.add_edge(1, 2);
  cyc.add_edge(2, 0);
  CHECK(bridge_edges(cyc) == std::vector<bool>{false, false, false});
}

TEST_CASE("node-cut feasibility needs an s1-s2 route clear of t and its neighbors") {
  // 0=s1 1=s2 4=t; triangle 0-1-2 plus 2-3-4 tail
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  CHECK(is_feasible_cpmnc(g, 0, 1, 4));

  // 0=s1 2=s2: the only s1-s2 routes use node 1, a neighbor of t=3
  Graph h(4);
  h.add_edge(0, 1);
  h.add_edge(1, 2);
  h.add_edge(1, 3);
  CHECK(!is_feasible_cpmnc(h, 0, 2, 3));
  CHECK(is_feasible_cpmec(h, 0, 2, 3));  // edge cut {1-3} works fine

  // s2 adjacent to t only through t itself: infeasible both ways
  Graph p = path5();
  CHECK(!is_feasible_cpmec(p, 0, 4, 2));
  CHECK(!is_feasible_cpmnc(p, 0, 4, 2));
  CHECK(is_feasible_cpmec(p, 0, 2, 4));
  // but s2=3 is a neighbor of t=4: no node cut can exist
  CHECK(!is_feasible_cpmnc(p, 0, 3, 4));
}

TEST_CASE("terminals must be pairwise distinct") {
  Graph g = path5();
  CHECK_THROWS_AS(require_distinct_terminals(g, 0, 0, 4), PreconditionError);
  CHECK_THROWS_AS(require_distinct_terminals(g, 0, 4, 4), PreconditionError);
  CHECK_THROWS_AS(require_distinct_terminals(g, 0, 1, 9), PreconditionError);
  CHECK_NOTHROW(require_distinct_terminals(g, 0, 2, 4));
}
