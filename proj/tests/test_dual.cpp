#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "cpmc/dual.hpp"
#include "fixtures.hpp"

using namespace cpmc;

TEST_CASE("triangle dual: two nodes joined by three parallel edges") {
  auto t = fixtures::triangle();
  Embedding emb = validate_embedding(t.graph, t.rotations);
  DualGraph d = build_dual(t.graph, emb);

  CHECK(d.graph.node_count() == 2);
  CHECK(d.graph.edge_count() == 3);
  for (EdgeId e = 0; e < 3; ++e) {
    CHECK(d.dual_edge_of_primal[e] != -1);
    CHECK(d.primal_edge_of_dual[d.dual_edge_of_primal[e]] == e);
    auto ed = d.graph.edge(d.dual_edge_of_primal[e]);
    CHECK(std::min(ed.u, ed.v) == 0);
    CHECK(std::max(ed.u, ed.v) == 1);
  }
  // Dual faces correspond to the three primal nodes.
  CHECK(d.embedding.face_count() == 3);
  std::set<int> faces(d.dual_face_of_primal_node.begin(), d.dual_face_of_primal_node.end());
  CHECK(faces.size() == 3);
  for (NodeId v = 0; v < 3; ++v)
    CHECK(d.primal_node_of_dual_face[d.dual_face_of_primal_node[v]] == v);
}

TEST_CASE("grid dual has one node per cell plus the outer node") {
  auto g = fixtures::grid(3, 3);
  Embedding emb = validate_embedding(g.graph, g.rotations);
  DualGraph d = build_dual(g.graph, emb);

  CHECK(d.graph.node_count() == 5);
  CHECK(d.graph.edge_count() == 12);
  CHECK(d.embedding.face_count() == 9);  // one per primal node
  for (NodeId v = 0; v < 9; ++v)
    CHECK(d.primal_node_of_dual_face[d.dual_face_of_primal_node[v]] == v);

  // A middle-row edge separates a bottom cell from a top cell.
  EdgeId mid = g.h(1, 0);
  auto ed = d.graph.edge(d.dual_edge_of_primal[mid]);
  CHECK(std::min(ed.u, ed.v) == 0);
  CHECK(std::max(ed.u, ed.v) == 3);

  // Dual degrees count the cells' sides: each cell node has degree 4.
  for (int f = 0; f < 5; ++f)
    CHECK(d.graph.degree(f) == (f == 1 ? 8 : 4));
}

TEST_CASE("dual edge weights copy the primal weights") {
  auto t = fixtures::triangle();
  t.graph.set_edge_weight(1, PerturbedWeight::with_eps(7, 2));
  Embedding emb = validate_embedding(t.graph, t.rotations);
  DualGraph d = build_dual(t.graph, emb);
  CHECK(d.graph.edge(d.dual_edge_of_primal[1]).weight == PerturbedWeight::with_eps(7, 2));
}

TEST_CASE("bridges vanish from the dual") {
  // Two triangles 0-1-2 and 3-4-5 joined by the bridge 2-3.
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 3);
  EdgeId bridge = g.add_edge(2, 3);
  auto rot = find_planar_rotation(g);
  REQUIRE(rot.has_value());
  Embedding emb = validate_embedding(g, *rot);
  REQUIRE(emb.face_count() == 3);

  DualGraph d = build_dual(g, emb);
  CHECK(d.graph.node_count() == 3);
  CHECK(d.graph.edge_count() == 6);
  CHECK(d.dual_edge_of_primal[bridge] == -1);
  // The bridge endpoints share their dual face; other nodes keep their own.
  CHECK(d.embedding.face_count() == 5);
  CHECK(d.dual_face_of_primal_node[2] == d.dual_face_of_primal_node[3]);
  std::set<int> faces(d.dual_face_of_primal_node.begin(), d.dual_face_of_primal_node.end());
  CHECK(faces.size() == 5);
  CHECK(d.primal_node_of_dual_face[d.dual_face_of_primal_node[2]] == 2);
}

TEST_CASE("an all-bridge graph dualizes to a single bare node") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto rot = find_planar_rotation(g);
  REQUIRE(rot.has_value());
  DualGraph d = build_dual(g, validate_embedding(g, *rot));
  CHECK(d.graph.node_count() == 1);
  CHECK(d.graph.edge_count() == 0);
  CHECK(d.embedding.face_count() == 1);
  CHECK(d.dual_face_of_primal_node == std::vector<int>{-1, -1, -1});
  CHECK(d.primal_node_of_dual_face == std::vector<NodeId>{-1});
}
