#include "cpmc/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace cpmc {

Graph perturb(const Graph& g, PerturbMode mode) {
  if (mode == PerturbMode::None) throw GraphError("perturb mode must be Edges or Nodes");
  Graph out = g;
  if (mode == PerturbMode::Edges) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      if (ed.weight.is_infinite()) continue;
      out.set_edge_weight(e, PerturbedWeight::with_eps(ed.weight.base(), e + 1));
    }
  } else {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const PerturbedWeight& w = g.node_weight(v);
      if (w.is_infinite()) continue;
      out.set_node_weight(v, PerturbedWeight::with_eps(w.base(), v + 1));
    }
  }
  out.set_perturb_mode(mode);
  return out;
}

std::vector<NodeId> connected_component(const Graph& g, NodeId seed,
                                        const std::vector<bool>& removed_nodes,
                                        const std::vector<bool>& removed_edges) {
  if (!g.has_node(seed)) throw GraphError("component seed out of range");
  auto node_gone = [&](NodeId v) {
    return !removed_nodes.empty() && removed_nodes[static_cast<std::size_t>(v)];
  };
  auto edge_gone = [&](EdgeId e) {
    return !removed_edges.empty() && removed_edges[static_cast<std::size_t>(e)];
  };
  if (!removed_nodes.empty() && removed_nodes.size() != static_cast<std::size_t>(g.node_count()))
    throw GraphError("removed_nodes mask size mismatch");
  if (!removed_edges.empty() && removed_edges.size() != static_cast<std::size_t>(g.edge_count()))
    throw GraphError("removed_edges mask size mismatch");
  if (node_gone(seed)) throw PreconditionError("component seed is a removed node");

  std::vector<bool> seen(static_cast<std::size_t>(g.node_count()), false);
  std::vector<NodeId> stack{seed}, out;
  seen[static_cast<std::size_t>(seed)] = true;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (EdgeId e : g.incident(v)) {
      if (edge_gone(e)) continue;
      NodeId w = g.other_end(e, v);
      if (node_gone(w) || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      stack.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return true;
  return static_cast<int>(connected_component(g, 0).size()) == g.node_count();
}

std::vector<bool> bridge_edges(const Graph& g) {
  int n = g.node_count();
  std::vector<bool> bridge(static_cast<std::size_t>(g.edge_count()), false);
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  // Iterative DFS; parallel edges between the same pair are handled
  // correctly because the parent EDGE (not node) is excluded.
  struct Frame {
    NodeId v;
    EdgeId parent_edge;
    std::size_t next;
  };
  for (NodeId root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.parent_edge) continue;
        NodeId w = g.other_end(e, f.v);
        if (disc[static_cast<std::size_t>(w)] == -1) {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          NodeId p = stack.back().v;
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(f.v)]);
          if (low[static_cast<std::size_t>(f.v)] > disc[static_cast<std::size_t>(p)])
            bridge[static_cast<std::size_t>(f.parent_edge)] = true;
        }
      }
    }
  }
  return bridge;
}

bool is_feasible_cpmnc(const Graph& g, NodeId s1, NodeId s2, NodeId t) {
  require_distinct_terminals(g, s1, s2, t);
  std::vector<bool> removed(static_cast<std::size_t>(g.node_count()), false);
  removed[static_cast<std::size_t>(t)] = true;
  for (EdgeId e : g.incident(t)) removed[static_cast<std::size_t>(g.other_end(e, t))] = true;
  if (removed[static_cast<std::size_t>(s1)] || removed[static_cast<std::size_t>(s2)]) return false;
  auto comp = connected_component(g, s1, removed);
  return std::binary_search(comp.begin(), comp.end(), s2);
}

bool is_feasible_cpmec(const Graph& g, NodeId s1, NodeId s2, NodeId t) {
  require_distinct_terminals(g, s1, s2, t);
  std::vector<bool> removed(static_cast<std::size_t>(g.node_count()), false);
  removed[static_cast<std::size_t>(t)] = true;
  auto comp = connected_component(g, s1, removed);
  return std::binary_search(comp.begin(), comp.end(), s2);
}

void require_distinct_terminals(const Graph& g, NodeId s1, NodeId s2, NodeId t) {
  if (!g.has_node(s1) || !g.has_node(s2) || !g.has_node(t))
    throw PreconditionError("terminal id out of range");
  if (s1 == s2 || s1 == t || s2 == t) throw PreconditionError("terminals must be distinct");
}

}  // namespace cpmc
