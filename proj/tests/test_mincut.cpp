#include "doctest.h"

#include <vector>

#include "cpmc/mincut.hpp"
#include "fixtures.hpp"

using namespace cpmc;

namespace {

Graph perturbed_path5(PerturbMode mode) {
  Graph g(5);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 1);
  return perturb(g, mode);
}

Graph perturbed_diamond() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  return perturb(g, PerturbMode::Edges);
}

}  // namespace

TEST_CASE("edge cut on a path picks the lightest edge") {
  Graph g = perturbed_path5(PerturbMode::Edges);
  auto cut = min_edge_cut(g, 0, 4);
  REQUIRE(cut.finite());
  // All edges share base 1; eps^4 is the smallest tiebreak.
  CHECK(cut.elements == std::vector<int>{3});
  CHECK(cut.total == PerturbedWeight::with_eps(1, 4));
  CHECK(cut.source_side == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("edge cut on a diamond is the unique perturbed minimum") {
  Graph g = perturbed_diamond();
  auto cut = min_edge_cut(g, 0, 3);
  REQUIRE(cut.finite());
  // Four two-edge cuts tie at base 2; {e2,e3} has the smallest eps tail.
  CHECK(cut.elements == std::vector<int>{2, 3});
  CHECK(cut.total == PerturbedWeight::with_eps(2, 3) + PerturbedWeight::with_eps(0, 4));
  CHECK(cut.source_side == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("reversing adjacency order does not change a perturbed cut") {
  Graph g = perturbed_diamond();
  auto fwd = min_edge_cut(g, 0, 3, AdjacencyOrder::Forward);
  auto rev = min_edge_cut(g, 0, 3, AdjacencyOrder::Reversed);
  CHECK(fwd.elements == rev.elements);
  CHECK(fwd.total == rev.total);
  CHECK(fwd.source_side == rev.source_side);
}

TEST_CASE("an infinite edge blocks any finite cut") {
  Graph g(2);
  g.add_edge(0, 1, PerturbedWeight::infinite());
  auto cut = min_edge_cut(g, 0, 1);
  CHECK(!cut.finite());
  CHECK(cut.elements.empty());
}

TEST_CASE("node cut on a path picks the lightest interior node") {
  Graph g = perturbed_path5(PerturbMode::Nodes);
  auto cut = min_node_cut(g, 0, 4);
  REQUIRE(cut.finite());
  CHECK(cut.elements == std::vector<int>{3});
  CHECK(cut.total == PerturbedWeight::with_eps(1, 4));
  CHECK(cut.source_side == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("node cut respects heavy nodes and edge disjoint routes") {
  // Two disjoint 0-t routes of interior length 2 each; one carries a
  // heavy node, so the cut takes the light node of each route.
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 5);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.set_node_weight(1, PerturbedWeight::finite(10));
  g.set_node_weight(2, PerturbedWeight::finite(3));
  g.set_node_weight(3, PerturbedWeight::finite(7));
  g.set_node_weight(4, PerturbedWeight::finite(2));
  auto cut = min_node_cut(g, 0, 5);
  REQUIRE(cut.finite());
  CHECK(cut.elements == std::vector<int>{2, 4});
  CHECK(cut.total == PerturbedWeight::finite(5));
  CHECK(cut.source_side == std::vector<NodeId>{0, 1, 3});
}

TEST_CASE("a direct source-sink edge makes every node cut infinite") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(2, 1);
  auto cut = min_node_cut(g, 0, 1);
  CHECK(!cut.finite());
}

TEST_CASE("cut from a set keeps the whole set on the source side") {
  Graph g = perturbed_path5(PerturbMode::Edges);
  auto cut = min_cut_from_set(g, {0, 1}, std::nullopt, 4, CutKind::Edge);
  REQUIRE(cut.finite());
  CHECK(cut.elements == std::vector<int>{3});
  CHECK(cut.source_side == std::vector<NodeId>{0, 1, 2, 3});

  Graph gn = perturbed_path5(PerturbMode::Nodes);
  auto ncut = min_cut_from_set(gn, {0, 1}, std::nullopt, 4, CutKind::Node);
  REQUIRE(ncut.finite());
  CHECK(ncut.elements == std::vector<int>{3});
  CHECK(ncut.source_side == std::vector<NodeId>{0, 1, 2});

  // extra shifts the protected region: forcing node 3 to the source
  // side leaves only the last edge.
  auto cut3 = min_cut_from_set(g, {0}, 3, 4, CutKind::Edge);
  CHECK(cut3.elements == std::vector<int>{3});

  // protected nodes may not be cut even when they are the cheapest route
  auto nc = min_cut_from_set(gn, {0, 1, 2, 3}, std::nullopt, 4, CutKind::Node);
  CHECK(!nc.finite());  // node 3 is adjacent to t and protected

  CHECK_THROWS_AS(min_cut_from_set(g, {0, 4}, std::nullopt, 4, CutKind::Edge),
                  PreconditionError);
  CHECK_THROWS_AS(min_cut_from_set(g, {}, std::nullopt, 4, CutKind::Edge), PreconditionError);
}

TEST_CASE("cut from a set separates a mid-path sink from both ends") {
  // 0-1-2-3-4 path, protect both ends {0, 4}, sink t=2.  Two edges must
  // go, one per side of t; eps ranks pick e1 and e3.
  Graph g = perturbed_path5(PerturbMode::Edges);
  auto cut = min_cut_from_set(g, {0, 4}, std::nullopt, 2, CutKind::Edge);
  REQUIRE(cut.finite());
  CHECK(cut.elements == std::vector<int>{1, 3});
  CHECK(cut.total == PerturbedWeight::with_eps(2, 2) + PerturbedWeight::with_eps(0, 4));
  CHECK(cut.source_side == std::vector<NodeId>{0, 1, 4});
}
