#pragma once

// Small hand-checked graphs shared by the test binaries.

#include <algorithm>
#include <utility>
#include <vector>

#include "cpmc/embedding.hpp"
#include "cpmc/graph.hpp"

namespace fixtures {

using cpmc::EdgeId;
using cpmc::Graph;
using cpmc::NodeId;

struct EmbeddedGraph {
  Graph graph;
  std::vector<std::vector<EdgeId>> rotations;
};

// R x C node grid in the plane, node (r,c) at point (c,r), y up.
// Node id r*C+c.  Horizontal edges first (H(r,c) = (r,c)-(r,c+1), id
// r*(C-1)+c), then vertical (V(r,c) = (r,c)-(r+1,c), id R*(C-1)+r*C+c).
// Rotations counterclockwise: E, N, W, S.
struct GridFixture : EmbeddedGraph {
  int rows = 0, cols = 0;
  NodeId node(int r, int c) const { return r * cols + c; }
  EdgeId h(int r, int c) const { return r * (cols - 1) + c; }
  EdgeId v(int r, int c) const { return rows * (cols - 1) + r * cols + c; }
};

inline GridFixture grid(int rows, int cols) {
  GridFixture g;
  g.rows = rows;
  g.cols = cols;
  g.graph = Graph(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) g.graph.add_edge(g.node(r, c), g.node(r, c + 1));
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c) g.graph.add_edge(g.node(r, c), g.node(r + 1, c));
  g.rotations.resize(static_cast<std::size_t>(rows * cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      auto& rot = g.rotations[static_cast<std::size_t>(g.node(r, c))];
      if (c + 1 < cols) rot.push_back(g.h(r, c));      // E
      if (r + 1 < rows) rot.push_back(g.v(r, c));      // N
      if (c > 0) rot.push_back(g.h(r, c - 1));         // W
      if (r > 0) rot.push_back(g.v(r - 1, c));         // S
    }
  return g;
}

// The face made of cell (r,c)'s four corners, by node-set lookup.
inline int cell_face(const cpmc::Embedding& emb, const GridFixture& g, int r, int c) {
  std::vector<NodeId> want = {g.node(r, c), g.node(r, c + 1), g.node(r + 1, c),
                              g.node(r + 1, c + 1)};
  std::sort(want.begin(), want.end());
  for (int f = 0; f < emb.face_count(); ++f) {
    auto nodes = emb.face(f).nodes;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (nodes == want) return f;
  }
  return -1;
}

// Marks the one face that is no grid cell as outer.
inline void set_grid_outer(cpmc::Embedding& emb, const GridFixture& g) {
  std::vector<bool> is_cell(static_cast<std::size_t>(emb.face_count()), false);
  for (int r = 0; r + 1 < g.rows; ++r)
    for (int c = 0; c + 1 < g.cols; ++c)
      is_cell[static_cast<std::size_t>(cell_face(emb, g, r, c))] = true;
  for (int f = 0; f < emb.face_count(); ++f)
    if (!is_cell[static_cast<std::size_t>(f)]) {
      emb.set_outer_face(f);
      return;
    }
}

// Chain 0-1-...-(n-1), edge i = (i, i+1).  One face.
inline EmbeddedGraph path(int n) {
  EmbeddedGraph p;
  p.graph = Graph(n);
  for (int i = 0; i + 1 < n; ++i) p.graph.add_edge(i, i + 1);
  p.rotations.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (i > 0) p.rotations[static_cast<std::size_t>(i)].push_back(i - 1);
    if (i + 1 < n) p.rotations[static_cast<std::size_t>(i)].push_back(i);
  }
  return p;
}

// 4-cycle 0-1-2-3 with chord 1-3.  Edges (0,1) (1,2) (2,3) (3,0) (1,3).
// Nodes 0,2 share the outer face; the chord splits the inside.
inline EmbeddedGraph square_with_chord() {
  EmbeddedGraph s;
  s.graph = Graph(4);
  s.graph.add_edge(0, 1);
  s.graph.add_edge(1, 2);
  s.graph.add_edge(2, 3);
  s.graph.add_edge(3, 0);
  s.graph.add_edge(1, 3);
  s.rotations = {{0, 3}, {0, 4, 1}, {1, 2}, {2, 4, 3}};
  return s;
}

// Two parallel corridors 0-2-1 and 0-3-1 between nodes 0 and 1, plus a
// center node 4 reaching both corridor midpoints through the stalk
// nodes 5 (weight 1, to node 2) and 6 (weight 5, to node 3).
// Edges: (0,2) (2,1) (0,3) (3,1) (2,5) (5,4) (3,6) (6,4).
inline EmbeddedGraph suspended_center() {
  EmbeddedGraph d;
  d.graph = Graph(7);
  d.graph.add_edge(0, 2);
  d.graph.add_edge(2, 1);
  d.graph.add_edge(0, 3);
  d.graph.add_edge(3, 1);
  d.graph.add_edge(2, 5);
  d.graph.add_edge(5, 4);
  d.graph.add_edge(3, 6);
  d.graph.add_edge(6, 4);
  d.graph.set_node_weight(6, cpmc::PerturbedWeight::finite(5));
  d.rotations = {{0, 2}, {1, 3}, {0, 4, 1}, {3, 6, 2}, {5, 7}, {4, 5}, {6, 7}};
  return d;
}

// Triangle 0-1-2, edges (0,1) (1,2) (2,0).
inline EmbeddedGraph triangle() {
  EmbeddedGraph t;
  t.graph = Graph(3);
  t.graph.add_edge(0, 1);
  t.graph.add_edge(1, 2);
  t.graph.add_edge(2, 0);
  t.rotations = {{0, 2}, {0, 1}, {1, 2}};
  return t;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace fixtures
