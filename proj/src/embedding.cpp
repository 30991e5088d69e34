#include "cpmc/embedding.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cpmc {

NodeId Embedding::dart_tail(Dart d) const { return dart_tail_.at(static_cast<std::size_t>(d)); }

void Embedding::set_outer_face(int f) {
  if (f < 0 || f >= face_count()) throw PreconditionError("outer face id out of range");
  outer_face_ = f;
}

std::vector<int> Embedding::faces_at_node(NodeId v) const {
  std::vector<int> out;
  for (EdgeId e : rotations_.at(static_cast<std::size_t>(v))) {
    Dart d = dart_of(e, dart_tail(dart_of(e, false)) != v);
    out.push_back(face_of_dart(d));
    out.push_back(face_of_dart(dart_rev(d)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  // Every face whose walk passes through v, including faces that touch v
  // only as a dart head, is covered: each visit leaves v via some dart.
  return out;
}

Embedding validate_embedding(const Graph& g, const std::vector<std::vector<EdgeId>>& rotations) {
  if (static_cast<int>(rotations.size()) != g.node_count())
    throw MalformedRotation("rotation list count differs from node count");
  if (!is_connected(g)) throw NonPlanarEmbedding("graph is not connected");

  Embedding emb;
  emb.rotations_ = rotations;
  emb.edge_count_ = g.edge_count();

  int m = g.edge_count();
  emb.dart_tail_.assign(static_cast<std::size_t>(2 * m), -1);
  for (EdgeId e = 0; e < m; ++e) {
    emb.dart_tail_[static_cast<std::size_t>(dart_of(e, false))] = g.edge(e).u;
    emb.dart_tail_[static_cast<std::size_t>(dart_of(e, true))] = g.edge(e).v;
  }

  // Each node's list must be exactly its incident edges, each once.
  std::vector<int> seen_edge(static_cast<std::size_t>(m), -1);
  std::vector<int> pos_at_tail(static_cast<std::size_t>(2 * m), -1);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto& rot = rotations[static_cast<std::size_t>(v)];
    if (static_cast<int>(rot.size()) != g.degree(v))
      throw MalformedRotation("rotation size differs from degree at node " + std::to_string(v));
    for (std::size_t i = 0; i < rot.size(); ++i) {
      EdgeId e = rot[i];
      if (!g.has_edge(e)) throw MalformedRotation("unknown edge id in rotation");
      const Edge& ed = g.edge(e);
      if (ed.u != v && ed.v != v)
        throw MalformedRotation("edge " + std::to_string(e) + " listed at non-endpoint node " +
                                std::to_string(v));
      if (seen_edge[static_cast<std::size_t>(e)] == v)
        throw MalformedRotation("edge " + std::to_string(e) + " listed twice at node " +
                                std::to_string(v));
      seen_edge[static_cast<std::size_t>(e)] = v;
      Dart out = dart_of(e, ed.v == v);  // dart leaving v
      pos_at_tail[static_cast<std::size_t>(out)] = static_cast<int>(i);
    }
  }

  // next(d) = rotation predecessor of rev(d) at head(d); with
  // counterclockwise rotations that walks the face on the left.
  emb.next_in_face_.assign(static_cast<std::size_t>(2 * m), -1);
  for (Dart d = 0; d < 2 * m; ++d) {
    Dart r = dart_rev(d);
    NodeId h = emb.dart_tail_[static_cast<std::size_t>(r)];
    const auto& rot = rotations[static_cast<std::size_t>(h)];
    int p = pos_at_tail[static_cast<std::size_t>(r)];
    EdgeId e2 = rot[(static_cast<std::size_t>(p) + rot.size() - 1) % rot.size()];
    emb.next_in_face_[static_cast<std::size_t>(d)] =
        dart_of(e2, g.edge(e2).v == h);  // leaves h
  }

  emb.face_of_dart_.assign(static_cast<std::size_t>(2 * m), -1);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (EdgeId e : rotations[static_cast<std::size_t>(v)]) {
      Dart start = dart_of(e, g.edge(e).v == v);
      if (emb.face_of_dart_[static_cast<std::size_t>(start)] != -1) continue;
      Face f;
      f.id = static_cast<int>(emb.faces_.size());
      Dart d = start;
      do {
        emb.face_of_dart_[static_cast<std::size_t>(d)] = f.id;
        f.darts.push_back(d);
        f.nodes.push_back(emb.dart_tail_[static_cast<std::size_t>(d)]);
        d = emb.next_in_face_[static_cast<std::size_t>(d)];
      } while (d != start);
      emb.faces_.push_back(std::move(f));
    }
  }

  int n = g.node_count();
  int f = static_cast<int>(emb.faces_.size());
  if (m == 0) {
    if (n != 1) throw NonPlanarEmbedding("edgeless multi-node graph");
    emb.faces_.push_back(Face{0, {}, {}});
    f = 1;
  }
  if (n - m + f != 2)
    throw NonPlanarEmbedding("Euler check failed: n=" + std::to_string(n) +
                             " m=" + std::to_string(m) + " f=" + std::to_string(f));
  emb.outer_face_ = 0;
  return emb;
}

std::optional<int> same_face(const Embedding& emb, NodeId a, NodeId b) {
  for (const Face& f : emb.faces()) {
    bool ha = false, hb = false;
    for (NodeId v : f.nodes) {
      ha |= v == a;
      hb |= v == b;
    }
    if (ha && hb) return f.id;
  }
  return std::nullopt;
}

Embedding reroot_outer_face(const Embedding& emb, NodeId v) {
  Embedding out = emb;
  auto fs = emb.faces_at_node(v);
  if (fs.empty()) throw PreconditionError("node has no incident face");
  out.set_outer_face(fs.front());
  return out;
}

std::pair<std::vector<NodeId>, std::vector<NodeId>> boundary_paths(const Embedding& emb, int f,
                                                                   NodeId a, NodeId b) {
  const Face& face = emb.face(f);
  if (face.darts.empty()) throw PreconditionError("face has no boundary");
  auto find_first = [&](NodeId x) {
    for (std::size_t i = 0; i < face.nodes.size(); ++i)
      if (face.nodes[i] == x) return static_cast<int>(i);
    throw PreconditionError("node " + std::to_string(x) + " not on face " + std::to_string(f));
  };
  int ia = find_first(a), ib = find_first(b);
  if (ia == ib) throw PreconditionError("boundary path endpoints coincide");
  std::size_t len = face.nodes.size();
  std::vector<NodeId> p1, p2;
  for (std::size_t i = static_cast<std::size_t>(ia);; i = (i + 1) % len) {
    p1.push_back(face.nodes[i]);
    if (static_cast<int>(i) == ib) break;
  }
  for (std::size_t i = static_cast<std::size_t>(ib);; i = (i + 1) % len) {
    p2.push_back(face.nodes[i]);
    if (static_cast<int>(i) == ia) break;
  }
  return {p1, p2};
}

std::optional<std::vector<std::vector<EdgeId>>> find_planar_rotation(const Graph& g) {
  if (g.node_count() > 8) throw PreconditionError("rotation search limited to 8 nodes");
  if (!is_connected(g)) return std::nullopt;
  std::vector<std::vector<EdgeId>> rot(static_cast<std::size_t>(g.node_count()));
  for (NodeId v = 0; v < g.node_count(); ++v) rot[static_cast<std::size_t>(v)] = g.incident(v);

  // Fix each list's first element, permute the rest (cyclic order).
  std::function<bool(NodeId)> rec = [&](NodeId v) -> bool {
    if (v == g.node_count()) {
      try {
        validate_embedding(g, rot);
        return true;
      } catch (const NonPlanarEmbedding&) {
        return false;
      }
    }
    auto& r = rot[static_cast<std::size_t>(v)];
    if (r.size() <= 2) return rec(v + 1);
    std::sort(r.begin() + 1, r.end());
    do {
      if (rec(v + 1)) return true;
    } while (std::next_permutation(r.begin() + 1, r.end()));
    return false;
  };
  if (rec(0)) return rot;
  return std::nullopt;
}

std::vector<EdgeId> outer_arc_edges(const Embedding& emb, NodeId a, NodeId b) {
  const Face& outer = emb.face(emb.outer_face());
  auto find_first = [&](NodeId x) {
    for (std::size_t i = 0; i < outer.nodes.size(); ++i)
      if (outer.nodes[i] == x) return static_cast<int>(i);
    throw PreconditionError("node " + std::to_string(x) + " not on the outer face");
  };
  int ia = find_first(a), ib = find_first(b);
  if (a == b) throw PreconditionError("arc endpoints coincide");
  std::vector<EdgeId> arc;
  std::size_t len = outer.darts.size();
  for (std::size_t i = static_cast<std::size_t>(ia); static_cast<int>(i) != ib;
       i = (i + 1) % len)
    arc.push_back(dart_edge(outer.darts[i]));
  return arc;
}

SideTestResult face_side_of_path(const Graph& g, const Embedding& emb, NodeId a, NodeId b,
                                 const std::vector<EdgeId>& path_edges, int face_c) {
  if (face_c == emb.outer_face()) throw PreconditionError("constrained face is the outer face");
  std::vector<bool> barrier(static_cast<std::size_t>(g.edge_count()), false);
  for (EdgeId e : path_edges) barrier[static_cast<std::size_t>(e)] = true;
  for (EdgeId e : outer_arc_edges(emb, a, b)) barrier[static_cast<std::size_t>(e)] = true;

  // Union faces across non-barrier edges.
  std::vector<int> parent(static_cast<std::size_t>(emb.face_count()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (barrier[static_cast<std::size_t>(e)]) continue;
    int fa = find(emb.face_of_dart(dart_of(e, false)));
    int fb = find(emb.face_of_dart(dart_of(e, true)));
    if (fa != fb) parent[static_cast<std::size_t>(fa)] = fb;
  }
  SideTestResult res;
  int cc = find(face_c);
  res.above = cc != find(emb.outer_face());
  for (int f = 0; f < emb.face_count(); ++f)
    if (find(f) == cc) res.above_faces.push_back(f);
  return res;
}

}  // namespace cpmc
