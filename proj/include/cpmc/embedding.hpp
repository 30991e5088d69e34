#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "cpmc/graph.hpp"

namespace cpmc {

struct MalformedRotation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonPlanarEmbedding : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A dart is a directed half of an undirected edge: dart 2e runs
// edge(e).u -> edge(e).v, dart 2e+1 the other way.
using Dart = int;

inline Dart dart_of(EdgeId e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
inline EdgeId dart_edge(Dart d) { return d / 2; }
inline Dart dart_rev(Dart d) { return d ^ 1; }

struct Face {
  int id = -1;
  std::vector<Dart> darts;   // boundary walk, in trace order
  std::vector<NodeId> nodes; // tails of the darts, same order
};

// Combinatorial embedding: a counterclockwise cyclic edge order per node.
// Faces are traced with the face on the LEFT of each dart (successor of
// dart d is the rotation predecessor of rev(d) at its head), so interior
// faces come out counterclockwise and the outer face clockwise.
class Embedding {
 public:
  const std::vector<std::vector<EdgeId>>& rotations() const { return rotations_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_.at(static_cast<std::size_t>(f)); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  int face_of_dart(Dart d) const { return face_of_dart_.at(static_cast<std::size_t>(d)); }
  Dart next_in_face(Dart d) const { return next_in_face_.at(static_cast<std::size_t>(d)); }

  NodeId dart_tail(Dart d) const;
  NodeId dart_head(Dart d) const { return dart_tail(dart_rev(d)); }

  int outer_face() const { return outer_face_; }
  void set_outer_face(int f);

  // Faces incident to v, ascending, each once.
  std::vector<int> faces_at_node(NodeId v) const;

  int node_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return edge_count_; }

  friend Embedding validate_embedding(const Graph& g,
                                      const std::vector<std::vector<EdgeId>>& rotations);

 private:
  std::vector<std::vector<EdgeId>> rotations_;
  std::vector<Dart> next_in_face_;
  std::vector<int> face_of_dart_;
  std::vector<Face> faces_;
  std::vector<NodeId> dart_tail_;
  int outer_face_ = 0;
  int edge_count_ = 0;
};

// Checks the rotation lists cover exactly the incident edge ends of a
// connected graph (MalformedRotation otherwise), traces all faces and
// requires Euler's n - m + f = 2 (NonPlanarEmbedding otherwise).
// Faces are numbered in trace order starting from node 0's first edge.
Embedding validate_embedding(const Graph& g, const std::vector<std::vector<EdgeId>>& rotations);

// Lowest face id containing both nodes on its boundary, if any.
std::optional<int> same_face(const Embedding& emb, NodeId a, NodeId b);

// Copy with outer face set to the lowest face id incident to v.
Embedding reroot_outer_face(const Embedding& emb, NodeId v);

// The two boundary walks of face f from a to b: first the walk from the
// first occurrence of a forward to the first occurrence of b, then the
// continuation from b back around to a.  Node sequences as walked;
// repeated nodes of a non-simple walk are kept.
std::pair<std::vector<NodeId>, std::vector<NodeId>> boundary_paths(const Embedding& emb, int f,
                                                                   NodeId a, NodeId b);

// Exhaustive search over rotation systems; intended for n <= 8 test
// fixtures only (cost grows with the product of (deg-1)! per node).
std::optional<std::vector<std::vector<EdgeId>>> find_planar_rotation(const Graph& g);

// --- side test -------------------------------------------------------
//
// For a simple path P from a to b, both on the outer face, the closed
// curve P + (outer-walk arc from b back to a against trace order) splits
// the sphere in two.  "Above" is the region bounded by that arc.  A face
// lies above iff it cannot reach the outer face through edges that are
// neither on P nor on the arc.  Equivalently: barrier = P's edges plus
// the outer-walk segment from the first occurrence of a forward to the
// first occurrence of b; two faces communicate across any non-barrier
// edge; above = not in the outer face's class.

// The barrier arc (outer-walk edges from a's occurrence forward to b's).
std::vector<EdgeId> outer_arc_edges(const Embedding& emb, NodeId a, NodeId b);

struct SideTestResult {
  bool above = false;
  std::vector<int> above_faces;  // the faces in C's class, ascending
};

SideTestResult face_side_of_path(const Graph& g, const Embedding& emb, NodeId a, NodeId b,
                                 const std::vector<EdgeId>& path_edges, int face_c);

}  // namespace cpmc
