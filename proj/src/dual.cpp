#include "cpmc/dual.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpmc {

DualGraph build_dual(const Graph& g, const Embedding& emb) {
  DualGraph dual;
  int m = g.edge_count();
  int nf = emb.face_count();
  dual.graph = Graph(nf);
  dual.dual_edge_of_primal.assign(static_cast<std::size_t>(m), -1);

  // Dual edge for every primal edge whose sides differ; a bridge sees
  // the same face twice and is dropped.  The dual dart leaving face
  // face_of(d) plays the role of primal dart d.
  for (EdgeId e = 0; e < m; ++e) {
    int f0 = emb.face_of_dart(dart_of(e, false));
    int f1 = emb.face_of_dart(dart_of(e, true));
    if (f0 == f1) continue;
    EdgeId de = dual.graph.add_edge(f0, f1, g.edge(e).weight);
    dual.dual_edge_of_primal[static_cast<std::size_t>(e)] = de;
    dual.primal_edge_of_dual.push_back(e);
  }

  // Rotation at a face: crossed edges in walk order.
  std::vector<std::vector<EdgeId>> rot(static_cast<std::size_t>(nf));
  for (const Face& f : emb.faces())
    for (Dart d : f.darts) {
      EdgeId de = dual.dual_edge_of_primal[static_cast<std::size_t>(dart_edge(d))];
      if (de != -1) rot[static_cast<std::size_t>(f.id)].push_back(de);
    }
  dual.embedding = validate_embedding(dual.graph, rot);

  // Dual dart matching primal dart d: the one leaving face_of(d).
  auto dual_dart_of = [&](Dart d) -> Dart {
    EdgeId de = dual.dual_edge_of_primal[static_cast<std::size_t>(dart_edge(d))];
    int f = emb.face_of_dart(d);
    return dart_of(de, dual.graph.edge(de).u != f);
  };

  // The dual face through dual_dart_of(d) collects the duals of all
  // primal darts pointing at head(d); with bridges dropped the faces of
  // a bridge's two endpoints merge, so nodes of one bridge-connected
  // piece share their dual face.
  dual.dual_face_of_primal_node.assign(static_cast<std::size_t>(g.node_count()), -1);
  dual.primal_node_of_dual_face.assign(static_cast<std::size_t>(dual.embedding.face_count()), -1);
  for (EdgeId e = 0; e < m; ++e) {
    if (dual.dual_edge_of_primal[static_cast<std::size_t>(e)] == -1) continue;
    for (bool side : {false, true}) {
      Dart d = dart_of(e, side);
      NodeId v = side ? g.edge(e).u : g.edge(e).v;  // head of d
      int df = dual.embedding.face_of_dart(dual_dart_of(d));
      int& slot = dual.dual_face_of_primal_node[static_cast<std::size_t>(v)];
      if (slot == -1)
        slot = df;
      else if (slot != df)
        throw std::logic_error("dual face orbit mismatch at node " + std::to_string(v));
      NodeId& back = dual.primal_node_of_dual_face[static_cast<std::size_t>(df)];
      if (back == -1 || v < back) back = v;
    }
  }
  return dual;
}

}  // namespace cpmc
