#include "cpmc/mincut.hpp"

#include <algorithm>
#include <queue>

namespace cpmc {

namespace {

// Dinic over an ordered group: capacities only ever add, subtract and
// compare, so the exact symbolic weights go straight through.  Arcs are
// paired with their reverses via id^1.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n, AdjacencyOrder order) : adj_(static_cast<std::size_t>(n)), order_(order) {}

  int arc_count() const { return static_cast<int>(to_.size()); }

  void add_arc_pair(int a, int b, PerturbedWeight cap_ab, PerturbedWeight cap_ba) {
    adj_[static_cast<std::size_t>(a)].push_back(arc_count());
    to_.push_back(b);
    cap_.push_back(std::move(cap_ab));
    adj_[static_cast<std::size_t>(b)].push_back(arc_count());
    to_.push_back(a);
    cap_.push_back(std::move(cap_ba));
  }

  // Max flow; true if finite, false if an all-Infinite augmenting path
  // exists (unbounded flow, no finite cut).
  bool run(int s, int t) {
    if (order_ == AdjacencyOrder::Reversed)
      for (auto& l : adj_) std::reverse(l.begin(), l.end());
    for (;;) {
      if (!bfs_level(s, t)) return true;
      ptr_.assign(adj_.size(), 0);
      for (;;) {
        PerturbedWeight pushed = dfs_push(s, t, PerturbedWeight::infinite());
        if (pushed.is_infinite()) return false;
        if (pushed.is_zero()) break;
      }
    }
  }

  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int a : adj_[static_cast<std::size_t>(v)]) {
        if (!cap_[static_cast<std::size_t>(a)].is_positive()) continue;
        int w = to_[static_cast<std::size_t>(a)];
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

  const PerturbedWeight& cap(int a) const { return cap_[static_cast<std::size_t>(a)]; }

 private:
  bool bfs_level(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    q.push(s);
    level_[static_cast<std::size_t>(s)] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a : adj_[static_cast<std::size_t>(v)]) {
        if (!cap_[static_cast<std::size_t>(a)].is_positive()) continue;
        int w = to_[static_cast<std::size_t>(a)];
        if (level_[static_cast<std::size_t>(w)] == -1) {
          level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(v)] + 1;
          q.push(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] != -1;
  }

  // Returns the amount pushed (zero when stuck); Infinite signals an
  // augmenting path made of Infinite residuals only.
  PerturbedWeight dfs_push(int v, int t, PerturbedWeight limit) {
    if (v == t) return limit;
    for (std::size_t& i = ptr_[static_cast<std::size_t>(v)];
         i < adj_[static_cast<std::size_t>(v)].size(); ++i) {
      int a = adj_[static_cast<std::size_t>(v)][i];
      int w = to_[static_cast<std::size_t>(a)];
      if (level_[static_cast<std::size_t>(w)] != level_[static_cast<std::size_t>(v)] + 1) continue;
      const PerturbedWeight& c = cap_[static_cast<std::size_t>(a)];
      if (!c.is_positive()) continue;
      PerturbedWeight pushed = dfs_push(w, t, min(limit, c));
      if (pushed.is_infinite()) return pushed;
      if (pushed.is_zero()) continue;
      cap_[static_cast<std::size_t>(a)] -= pushed;
      cap_[static_cast<std::size_t>(a ^ 1)] += pushed;
      return pushed;
    }
    return PerturbedWeight::zero();
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<PerturbedWeight> cap_;
  std::vector<int> level_;
  std::vector<std::size_t> ptr_;
  AdjacencyOrder order_;
};

CutResult infinite_result(CutKind kind) {
  CutResult r;
  r.kind = kind;
  r.total = PerturbedWeight::infinite();
  return r;
}

}  // namespace

CutResult min_edge_cut(const Graph& g, NodeId s, NodeId t, AdjacencyOrder order) {
  if (!g.has_node(s) || !g.has_node(t) || s == t) throw PreconditionError("bad cut terminals");
  FlowNetwork net(g.node_count(), order);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    net.add_arc_pair(g.edge(e).u, g.edge(e).v, g.edge(e).weight, g.edge(e).weight);
  if (!net.run(s, t)) return infinite_result(CutKind::Edge);

  auto reach = net.residual_reachable(s);
  CutResult res;
  res.kind = CutKind::Edge;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    bool ru = reach[static_cast<std::size_t>(g.edge(e).u)];
    bool rv = reach[static_cast<std::size_t>(g.edge(e).v)];
    if (ru != rv) {
      res.elements.push_back(e);
      res.total += g.edge(e).weight;
    }
  }
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (reach[static_cast<std::size_t>(v)]) res.source_side.push_back(v);
  return res;
}

CutResult min_node_cut(const Graph& g, NodeId s, NodeId t, AdjacencyOrder order) {
  if (!g.has_node(s) || !g.has_node(t) || s == t) throw PreconditionError("bad cut terminals");
  // v -> v_in = 2v, v_out = 2v+1; s and t unsplit, addressed by v_out/v_in.
  int n = g.node_count();
  FlowNetwork net(2 * n, order);
  auto inn = [](NodeId v) { return 2 * v; };
  auto out = [](NodeId v) { return 2 * v + 1; };
  for (NodeId v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    net.add_arc_pair(inn(v), out(v), g.node_weight(v), PerturbedWeight::zero());
  }
  auto exit_of = [&](NodeId v) { return v == s || v == t ? inn(v) : out(v); };
  auto entry_of = [&](NodeId v) { return inn(v); };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    NodeId u = g.edge(e).u, v = g.edge(e).v;
    net.add_arc_pair(exit_of(u), entry_of(v), PerturbedWeight::infinite(),
                     PerturbedWeight::zero());
    net.add_arc_pair(exit_of(v), entry_of(u), PerturbedWeight::infinite(),
                     PerturbedWeight::zero());
  }
  if (!net.run(inn(s), inn(t))) return infinite_result(CutKind::Node);

  auto reach = net.residual_reachable(inn(s));
  CutResult res;
  res.kind = CutKind::Node;
  for (NodeId v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    if (reach[static_cast<std::size_t>(inn(v))] && !reach[static_cast<std::size_t>(out(v))]) {
      res.elements.push_back(v);
      res.total += g.node_weight(v);
    }
  }
  std::vector<bool> cut_mask(static_cast<std::size_t>(n), false);
  for (int v : res.elements) cut_mask[static_cast<std::size_t>(v)] = true;
  res.source_side = connected_component(g, s, cut_mask);
  if (std::binary_search(res.source_side.begin(), res.source_side.end(), t))
    throw std::logic_error("node cut failed to separate sink");
  return res;
}

CutResult min_cut_from_set(const Graph& g, const std::vector<NodeId>& source_set,
                           std::optional<NodeId> extra, NodeId t, CutKind kind,
                           AdjacencyOrder order) {
  if (source_set.empty() && !extra) throw PreconditionError("empty source set");
  Graph h = g;
  NodeId dummy = h.add_node(PerturbedWeight::infinite());
  std::vector<NodeId> tied = source_set;
  if (extra) tied.push_back(*extra);
  for (NodeId v : tied) {
    if (v == t) throw PreconditionError("sink inside source set");
    h.add_edge(dummy, v, PerturbedWeight::infinite());
  }
  if (kind == CutKind::Node)
    for (NodeId v : source_set) h.set_node_weight(v, PerturbedWeight::infinite());

  CutResult raw = kind == CutKind::Edge ? min_edge_cut(h, dummy, t, order)
                                        : min_node_cut(h, dummy, t, order);
  CutResult res;
  res.kind = kind;
  res.total = raw.total;
  if (!raw.finite()) return res;
  for (int el : raw.elements) {
    bool is_dummy_edge = kind == CutKind::Edge && el >= g.edge_count();
    bool is_dummy_node = kind == CutKind::Node && el >= g.node_count();
    if (is_dummy_edge || is_dummy_node)
      throw std::logic_error("infinite dummy element in finite cut");
    res.elements.push_back(el);
  }
  for (NodeId v : raw.source_side)
    if (v != dummy) res.source_side.push_back(v);
  return res;
}

}  // namespace cpmc
