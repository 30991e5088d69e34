#include "cpmc/lcsp.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "cpmc/dual.hpp"

namespace cpmc {

namespace {

struct FaceUnion {
  std::vector<int> parent;
  explicit FaceUnion(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(b))] = find(a); }
};

std::vector<bool> expand_mask(const std::vector<bool>& m, std::size_t size, bool dflt,
                              const char* what) {
  if (m.empty()) return std::vector<bool>(size, dflt);
  if (m.size() != size) throw PreconditionError(std::string(what) + " mask has wrong size");
  return m;
}

// Classes of faces joined across every edge not in the barrier.
FaceUnion face_classes(const Graph& g, const Embedding& emb, const std::vector<bool>& barrier) {
  FaceUnion fu(emb.face_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (barrier[static_cast<std::size_t>(e)]) continue;
    fu.unite(emb.face_of_dart(dart_of(e, false)), emb.face_of_dart(dart_of(e, true)));
  }
  return fu;
}

std::vector<bool> barrier_of(const Graph& g, const Embedding& emb, const LcspQuery& q,
                             const std::vector<EdgeId>& path_edges) {
  std::vector<bool> barrier(static_cast<std::size_t>(g.edge_count()), false);
  for (EdgeId e : path_edges) {
    g.edge(e);
    barrier[static_cast<std::size_t>(e)] = true;
  }
  if (q.rule == SideRule::AboveArc) {
    for (EdgeId e : outer_arc_edges(emb, q.a, q.b)) barrier[static_cast<std::size_t>(e)] = true;
  } else {
    if (!g.has_edge(q.closure_edge))
      throw PreconditionError("closure edge required for the outer-face side rule");
    barrier[static_cast<std::size_t>(q.closure_edge)] = true;
  }
  return barrier;
}

// Nodes barred from the path interior: outer-face nodes under AboveArc.
std::vector<bool> interior_forbidden(const Graph& g, const Embedding& emb, const LcspQuery& q) {
  std::vector<bool> forbidden(static_cast<std::size_t>(g.node_count()), false);
  if (q.rule == SideRule::AboveArc) {
    for (NodeId v : emb.face(emb.outer_face()).nodes) forbidden[static_cast<std::size_t>(v)] = true;
    forbidden[static_cast<std::size_t>(q.a)] = false;
    forbidden[static_cast<std::size_t>(q.b)] = false;
  }
  return forbidden;
}

struct DijkstraOut {
  std::vector<PerturbedWeight> dist;
  std::vector<bool> reached;
  std::vector<EdgeId> via_edge;  // edge taken into the node, -1 at the source
};

// Shortest distances from src over alive, finite-weight edges, never
// entering a blocked node.  blocked[src] is ignored.
DijkstraOut run_dijkstra(const Graph& g, NodeId src, const std::vector<bool>& alive,
                         const std::vector<bool>& blocked) {
  auto n = static_cast<std::size_t>(g.node_count());
  DijkstraOut out{std::vector<PerturbedWeight>(n), std::vector<bool>(n, false),
                  std::vector<EdgeId>(n, -1)};
  using Item = std::pair<PerturbedWeight, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  std::vector<bool> settled(n, false);
  out.dist[static_cast<std::size_t>(src)] = PerturbedWeight::zero();
  out.reached[static_cast<std::size_t>(src)] = true;
  pq.emplace(PerturbedWeight::zero(), src);
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    auto xi = static_cast<std::size_t>(x);
    if (settled[xi]) continue;
    settled[xi] = true;
    for (EdgeId e : g.incident(x)) {
      if (!alive[static_cast<std::size_t>(e)]) continue;
      const Edge& ed = g.edge(e);
      if (ed.weight.is_infinite()) continue;
      NodeId y = ed.u == x ? ed.v : ed.u;
      auto yi = static_cast<std::size_t>(y);
      if (blocked[yi] || settled[yi]) continue;
      PerturbedWeight nd = d + ed.weight;
      if (!out.reached[yi] || nd < out.dist[yi]) {
        out.dist[yi] = nd;
        out.reached[yi] = true;
        out.via_edge[yi] = e;
        pq.emplace(std::move(nd), y);
      }
    }
  }
  return out;
}

// True when `cand` improves on `best`: smaller total, or equal total and
// lexicographically smaller edge list.  Keeps every solver deterministic
// even on unperturbed ties.
bool improves(const std::optional<ConstrainedPath>& best, const PerturbedWeight& total,
              const std::vector<EdgeId>& edges) {
  if (!best) return true;
  if (total < best->total) return true;
  return total == best->total && edges < best->edges;
}

}  // namespace

void validate_lcsp_query(const Graph& g, const Embedding& emb, const LcspQuery& q) {
  if (!g.has_node(q.a) || !g.has_node(q.b))
    throw PreconditionError("path endpoint id out of range");
  if (q.a == q.b) throw PreconditionError("path endpoints must be distinct");
  if (q.face_c < 0 || q.face_c >= emb.face_count())
    throw PreconditionError("constrained face id out of range");
  const Face& outer = emb.face(emb.outer_face());
  auto on_outer = [&](NodeId v) {
    return std::find(outer.nodes.begin(), outer.nodes.end(), v) != outer.nodes.end();
  };
  if (!on_outer(q.a) || !on_outer(q.b))
    throw PreconditionError("path endpoints must lie on the outer face");
  if (q.rule == SideRule::AboveArc) {
    if (q.face_c == emb.outer_face())
      throw PreconditionError("constrained face may not be the outer face");
  } else {
    if (!g.has_edge(q.closure_edge))
      throw PreconditionError("closure edge required for the outer-face side rule");
  }
}

bool lcsp_feasible(const Graph& g, const Embedding& emb, const LcspQuery& q,
                   const std::vector<EdgeId>& path_edges) {
  if (q.rule == SideRule::AboveArc)
    return face_side_of_path(g, emb, q.a, q.b, path_edges, q.face_c).above;
  FaceUnion fu = face_classes(g, emb, barrier_of(g, emb, q, path_edges));
  return fu.find(q.face_c) == fu.find(emb.outer_face());
}

std::vector<int> lcsp_side_witness(const Graph& g, const Embedding& emb, const LcspQuery& q,
                                   const std::vector<EdgeId>& path_edges) {
  if (q.rule == SideRule::AboveArc)
    return face_side_of_path(g, emb, q.a, q.b, path_edges, q.face_c).above_faces;
  FaceUnion fu = face_classes(g, emb, barrier_of(g, emb, q, path_edges));
  std::vector<int> cls;
  int root = fu.find(q.face_c);
  for (int f = 0; f < emb.face_count(); ++f)
    if (fu.find(f) == root) cls.push_back(f);
  return cls;
}

std::optional<ConstrainedPath> shortest_path_via_directed_edge(const Graph& g, NodeId a, NodeId b,
                                                               EdgeId e, bool reversed,
                                                               const std::vector<bool>& alive_in,
                                                               const std::vector<bool>& forbidden_in) {
  if (!g.has_node(a) || !g.has_node(b)) throw PreconditionError("path endpoint id out of range");
  if (a == b) throw PreconditionError("path endpoints must be distinct");
  if (!g.has_edge(e)) throw PreconditionError("via edge id out of range");
  auto nn = static_cast<std::size_t>(g.node_count());
  auto nm = static_cast<std::size_t>(g.edge_count());
  std::vector<bool> alive = expand_mask(alive_in, nm, true, "alive");
  std::vector<bool> forbidden = expand_mask(forbidden_in, nn, false, "forbidden");

  if (!alive[static_cast<std::size_t>(e)] || g.edge(e).weight.is_infinite()) return std::nullopt;
  NodeId u = reversed ? g.edge(e).v : g.edge(e).u;
  NodeId v = reversed ? g.edge(e).u : g.edge(e).v;
  if (v == a || u == b) return std::nullopt;  // would repeat an endpoint
  if (forbidden[static_cast<std::size_t>(u)] && u != a) return std::nullopt;
  if (forbidden[static_cast<std::size_t>(v)] && v != b) return std::nullopt;

  // Lower bound for the closing leg: v to b avoiding u.  The true leg
  // also avoids the first leg's nodes, so this only underestimates.
  std::vector<bool> blocked_vb = forbidden;
  blocked_vb[static_cast<std::size_t>(u)] = true;
  blocked_vb[static_cast<std::size_t>(b)] = false;
  DijkstraOut to_b = run_dijkstra(g, b, alive, blocked_vb);
  if (!to_b.reached[static_cast<std::size_t>(v)]) return std::nullopt;

  // Lower bound for the first leg: distance to u avoiding v.
  std::vector<bool> blocked_au = forbidden;
  blocked_au[static_cast<std::size_t>(v)] = true;
  blocked_au[static_cast<std::size_t>(a)] = false;
  DijkstraOut to_u = run_dijkstra(g, u, alive, blocked_au);
  if (!to_u.reached[static_cast<std::size_t>(a)]) return std::nullopt;

  const PerturbedWeight& w_e = g.edge(e).weight;
  PerturbedWeight tail_bound = w_e + to_b.dist[static_cast<std::size_t>(v)];

  std::optional<ConstrainedPath> best;
  std::vector<bool> visited(nn, false);
  std::vector<NodeId> leg_nodes{a};
  std::vector<EdgeId> leg_edges;
  visited[static_cast<std::size_t>(a)] = true;

  auto close_at_u = [&](const PerturbedWeight& leg_total) {
    std::vector<bool> blocked = forbidden;
    for (std::size_t i = 0; i < nn; ++i)
      if (visited[i]) blocked[i] = true;
    blocked[static_cast<std::size_t>(u)] = true;
    blocked[static_cast<std::size_t>(b)] = false;
    DijkstraOut leg2 = run_dijkstra(g, v, alive, blocked);
    if (!leg2.reached[static_cast<std::size_t>(b)]) return;
    PerturbedWeight total = leg_total + w_e + leg2.dist[static_cast<std::size_t>(b)];
    std::vector<NodeId> nodes = leg_nodes;
    std::vector<EdgeId> edges = leg_edges;
    edges.push_back(e);
    // walk b back to v along the tree
    std::vector<NodeId> tail_nodes;
    std::vector<EdgeId> tail_edges;
    NodeId x = b;
    while (x != v) {
      EdgeId via = leg2.via_edge[static_cast<std::size_t>(x)];
      tail_nodes.push_back(x);
      tail_edges.push_back(via);
      x = g.other_end(via, x);
    }
    nodes.push_back(v);
    for (std::size_t i = tail_nodes.size(); i-- > 0;) {
      edges.push_back(tail_edges[i]);
      nodes.push_back(tail_nodes[i]);
    }
    if (improves(best, total, edges))
      best = ConstrainedPath{std::move(nodes), std::move(edges), std::move(total), {}};
  };

  // Depth-first over simple a-u legs, cheapest-completion pruning.
  auto rec = [&](auto&& self, NodeId cur, const PerturbedWeight& total) -> void {
    if (cur == u) {
      close_at_u(total);
      return;
    }
    for (EdgeId ne : g.incident(cur)) {
      if (!alive[static_cast<std::size_t>(ne)]) continue;
      const Edge& ed = g.edge(ne);
      if (ed.weight.is_infinite()) continue;
      NodeId nxt = ed.u == cur ? ed.v : ed.u;
      auto ni = static_cast<std::size_t>(nxt);
      if (visited[ni] || forbidden[ni] || nxt == v || nxt == b) continue;
      if (!to_u.reached[ni]) continue;
      PerturbedWeight ntotal = total + ed.weight;
      if (best) {
        PerturbedWeight bound = ntotal + to_u.dist[ni] + tail_bound;
        if (bound > best->total) continue;
      }
      visited[ni] = true;
      leg_nodes.push_back(nxt);
      leg_edges.push_back(ne);
      self(self, nxt, ntotal);
      leg_edges.pop_back();
      leg_nodes.pop_back();
      visited[ni] = false;
    }
  };
  rec(rec, a, PerturbedWeight::zero());
  return best;
}

namespace {

// Exhaustive simple-path search pruned against the incumbent; settles
// the optimum no matter what the enlargement rounds saw.
void exact_feasible_search(const Graph& g, const Embedding& emb, const LcspQuery& q,
                           const std::vector<bool>& forbidden,
                           std::optional<ConstrainedPath>& best) {
  auto nn = static_cast<std::size_t>(g.node_count());
  std::vector<bool> all_alive(static_cast<std::size_t>(g.edge_count()), true);
  std::vector<bool> blocked = forbidden;
  blocked[static_cast<std::size_t>(q.b)] = false;
  DijkstraOut to_b = run_dijkstra(g, q.b, all_alive, blocked);
  if (!to_b.reached[static_cast<std::size_t>(q.a)]) return;

  std::vector<bool> visited(nn, false);
  std::vector<NodeId> nodes{q.a};
  std::vector<EdgeId> edges;
  visited[static_cast<std::size_t>(q.a)] = true;

  auto rec = [&](auto&& self, NodeId cur, const PerturbedWeight& total) -> void {
    if (cur == q.b) {
      if (!lcsp_feasible(g, emb, q, edges)) return;
      if (improves(best, total, edges)) best = ConstrainedPath{nodes, edges, total, {}};
      return;
    }
    for (EdgeId ne : g.incident(cur)) {
      const Edge& ed = g.edge(ne);
      if (ed.weight.is_infinite()) continue;
      NodeId nxt = ed.u == cur ? ed.v : ed.u;
      auto ni = static_cast<std::size_t>(nxt);
      if (visited[ni] || forbidden[ni]) continue;
      if (!to_b.reached[ni]) continue;
      PerturbedWeight ntotal = total + ed.weight;
      if (best && ntotal + to_b.dist[ni] > best->total) continue;
      visited[ni] = true;
      nodes.push_back(nxt);
      edges.push_back(ne);
      self(self, nxt, ntotal);
      edges.pop_back();
      nodes.pop_back();
      visited[ni] = false;
    }
  };
  rec(rec, q.a, PerturbedWeight::zero());
}

}  // namespace

std::optional<ConstrainedPath> solve_lcsp(const Graph& g, const Embedding& emb,
                                          const LcspQuery& q) {
  validate_lcsp_query(g, emb, q);
  auto nm = static_cast<std::size_t>(g.edge_count());
  std::vector<bool> forbidden = interior_forbidden(g, emb, q);

  std::optional<ConstrainedPath> best;
  auto consider = [&](std::optional<ConstrainedPath> cand) {
    if (!cand) return;
    if (!lcsp_feasible(g, emb, q, cand->edges)) return;
    if (improves(best, cand->total, cand->edges)) best = std::move(*cand);
  };

  // Enlargement rounds: collect candidates through the boundary of C's
  // current face class, then absorb that boundary and clean up pendant
  // nodes, until the class reaches the outer face.
  std::vector<bool> alive(nm, true);
  std::vector<int> alive_degree(static_cast<std::size_t>(g.node_count()), 0);
  for (NodeId x = 0; x < g.node_count(); ++x) alive_degree[static_cast<std::size_t>(x)] = g.degree(x);
  FaceUnion fu(emb.face_count());

  auto drop_edge = [&](EdgeId e) {
    alive[static_cast<std::size_t>(e)] = false;
    fu.unite(emb.face_of_dart(dart_of(e, false)), emb.face_of_dart(dart_of(e, true)));
    --alive_degree[static_cast<std::size_t>(g.edge(e).u)];
    --alive_degree[static_cast<std::size_t>(g.edge(e).v)];
  };

  while (fu.find(q.face_c) != fu.find(emb.outer_face())) {
    int cls = fu.find(q.face_c);
    std::vector<EdgeId> boundary;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!alive[static_cast<std::size_t>(e)]) continue;
      if (fu.find(emb.face_of_dart(dart_of(e, false))) == cls ||
          fu.find(emb.face_of_dart(dart_of(e, true))) == cls)
        boundary.push_back(e);
    }
    if (boundary.empty()) break;
    for (EdgeId e : boundary) {
      consider(shortest_path_via_directed_edge(g, q.a, q.b, e, false, alive, forbidden));
      consider(shortest_path_via_directed_edge(g, q.a, q.b, e, true, alive, forbidden));
    }
    for (EdgeId e : boundary) drop_edge(e);
    // pendant cleanup: a node off the endpoints with one remaining edge
    // carries no simple a-b path
    bool again = true;
    while (again) {
      again = false;
      for (NodeId x = 0; x < g.node_count(); ++x) {
        if (x == q.a || x == q.b) continue;
        if (alive_degree[static_cast<std::size_t>(x)] != 1) continue;
        for (EdgeId e : g.incident(x))
          if (alive[static_cast<std::size_t>(e)]) {
            drop_edge(e);
            break;
          }
        again = true;
      }
    }
  }

  exact_feasible_search(g, emb, q, forbidden, best);
  if (best) best->side_witness = lcsp_side_witness(g, emb, q, best->edges);
  return best;
}

namespace {

// Splices a new edge into x's rotation inside face f of the walk `emb`
// traced, between the walk's leaving and arriving edges at x's first
// occurrence.
void insert_into_face_wedge(const Embedding& emb, std::vector<std::vector<EdgeId>>& rot, int f,
                            NodeId x, EdgeId fresh) {
  const Face& face = emb.face(f);
  std::size_t k = face.darts.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (emb.dart_tail(face.darts[i]) != x) continue;
    EdgeId leave = dart_edge(face.darts[i]);
    EdgeId arrive = dart_edge(face.darts[(i + k - 1) % k]);
    auto& r = rot[static_cast<std::size_t>(x)];
    auto it = std::find(r.begin(), r.end(), leave);
    if (it == r.end()) throw std::logic_error("face walk edge missing from rotation");
    std::size_t j = static_cast<std::size_t>(it - r.begin());
    if (r[(j + 1) % r.size()] != arrive)
      throw std::logic_error("face wedge does not match rotation order");
    r.insert(r.begin() + static_cast<std::ptrdiff_t>(j) + 1, fresh);
    return;
  }
  throw std::logic_error("node not on the face it should bound");
}

}  // namespace

CpmcSolution solve_cpmec_same_face(const PlanarInstance& inst) {
  const Graph& g = inst.graph;
  require_distinct_terminals(g, inst.s1, inst.s2, inst.t);
  if (!inst.rotations) throw PreconditionError("embedding required for the same-face cut solver");
  Embedding emb = validate_embedding(g, *inst.rotations);
  auto shared = same_face(emb, inst.s1, inst.t);
  if (!shared) throw PreconditionError("s1 and t share no face");

  if (!is_feasible_cpmec(g, inst.s1, inst.s2, inst.t)) {
    CutResult none;
    none.kind = CutKind::Edge;
    none.total = PerturbedWeight::infinite();
    return CpmcSolution{std::move(none), {}, {}};
  }

  // Close the s1-t corridor with an uncuttable edge drawn inside the
  // shared face; it splits that face in two.
  Graph aug = g;
  EdgeId hat = aug.add_edge(inst.s1, inst.t, PerturbedWeight::infinite());
  std::vector<std::vector<EdgeId>> rot = *inst.rotations;
  insert_into_face_wedge(emb, rot, *shared, inst.s1, hat);
  insert_into_face_wedge(emb, rot, *shared, inst.t, hat);
  Embedding aug_emb = validate_embedding(aug, rot);

  DualGraph dual = build_dual(aug, aug_emb);
  EdgeId hat_dual = dual.dual_edge_of_primal[static_cast<std::size_t>(hat)];
  if (hat_dual < 0) throw std::logic_error("corridor edge came out a bridge");

  // Cutting a valid edge set is walking the dual from one flank of the
  // corridor edge to the other while s2's face keeps touching s1's.
  int outer_dual = dual.dual_face_of_primal_node[static_cast<std::size_t>(inst.s1)];
  int c_dual = dual.dual_face_of_primal_node[static_cast<std::size_t>(inst.s2)];
  if (c_dual < 0) {
    // s2 sits in an all-bridge fringe; its piece shares the face of the
    // first node reachable over bridges that has one.
    std::vector<NodeId> stack{inst.s2};
    std::vector<bool> seen(static_cast<std::size_t>(aug.node_count()), false);
    seen[static_cast<std::size_t>(inst.s2)] = true;
    while (!stack.empty() && c_dual < 0) {
      NodeId x = stack.back();
      stack.pop_back();
      for (EdgeId e : aug.incident(x)) {
        if (dual.dual_edge_of_primal[static_cast<std::size_t>(e)] >= 0) continue;  // not a bridge
        NodeId y = aug.other_end(e, x);
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        c_dual = dual.dual_face_of_primal_node[static_cast<std::size_t>(y)];
        if (c_dual >= 0) break;
        stack.push_back(y);
      }
    }
    if (c_dual < 0) throw std::logic_error("no anchored face for s2's bridge piece");
  }
  dual.embedding.set_outer_face(outer_dual);

  LcspQuery q;
  q.a = dual.graph.edge(hat_dual).u;
  q.b = dual.graph.edge(hat_dual).v;
  q.face_c = c_dual;
  q.rule = SideRule::WithOuterFace;
  q.closure_edge = hat_dual;
  auto path = solve_lcsp(dual.graph, dual.embedding, q);
  if (!path) throw std::logic_error("feasible instance produced no dual route");

  std::vector<int> cut_edges;
  for (EdgeId de : path->edges) {
    EdgeId pe = dual.primal_edge_of_dual[static_cast<std::size_t>(de)];
    if (pe == hat) throw std::logic_error("dual route crossed the corridor edge");
    cut_edges.push_back(pe);
  }
  std::sort(cut_edges.begin(), cut_edges.end());

  std::vector<bool> removed(static_cast<std::size_t>(g.edge_count()), false);
  for (int e : cut_edges) removed[static_cast<std::size_t>(e)] = true;
  CutResult res;
  res.kind = CutKind::Edge;
  res.elements = cut_edges;
  res.total = path->total;
  res.source_side = connected_component(g, inst.s1, {}, removed);
  CpmcSolution out;
  out.preserved = res.source_side;
  out.separated = connected_component(g, inst.t, {}, removed);
  out.cut = std::move(res);
  if (std::binary_search(out.preserved.begin(), out.preserved.end(), inst.t))
    throw std::logic_error("cut failed to separate t");
  if (!std::binary_search(out.preserved.begin(), out.preserved.end(), inst.s2))
    throw std::logic_error("cut failed to preserve s1-s2");
  return out;
}

}  // namespace cpmc
