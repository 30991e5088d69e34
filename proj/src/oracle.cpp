#include "cpmc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

namespace cpmc {

namespace {

struct BestCut {
  bool found = false;
  PerturbedWeight total;
  std::vector<int> elements;
  std::vector<NodeId> source_side;
};

bool beats(const BestCut& best, const PerturbedWeight& total, const std::vector<int>& elements) {
  if (!best.found) return true;
  if (total < best.total) return true;
  return total == best.total && elements < best.elements;
}

void absorb(BestCut& into, const BestCut& from) {
  if (from.found && beats(into, from.total, from.elements)) into = from;
}

// One removal world for the subset search: mask semantics differ only in
// which argument of connected_component the mask feeds.
struct CutSpace {
  const Graph* g = nullptr;
  NodeId s1 = -1;
  bool node_kind = false;
  std::vector<int> candidates;  // ascending element ids
  std::vector<bool> removed;

  std::vector<NodeId> component() const {
    return node_kind ? connected_component(*g, s1, removed, {})
                     : connected_component(*g, s1, {}, removed);
  }
  const PerturbedWeight& weight_of(int c) const {
    return node_kind ? g->node_weight(c) : g->edge(c).weight;
  }
};

// Cross-task pruning bound: the base value of the best cut any task has
// recorded so far.  A partial total with a strictly larger base can
// never win no matter how the epsilon terms compare, so pruning on a
// stale or concurrent read only skips provable losers and the merged
// answer stays schedule-independent.
struct SharedBase {
  std::atomic<std::int64_t> value{std::numeric_limits<std::int64_t>::max()};
  void tighten(std::int64_t b) {
    std::int64_t cur = value.load(std::memory_order_relaxed);
    while (b < cur && !value.compare_exchange_weak(cur, b, std::memory_order_relaxed)) {
    }
  }
  bool prunes(const PerturbedWeight& total) const {
    return total.base() > value.load(std::memory_order_relaxed);
  }
};

// Branch and bound over candidate subsets in ascending id order.
// Positive weights make every superset of a valid cut strictly heavier,
// so a valid subset is recorded and backtracked; a partial total beyond
// the incumbent is cut off, an equal one lives on for the lexicographic
// tie-break; once s1-s2 breaks, no superset can mend it.
void subset_search(CutSpace& space, std::size_t idx, NodeId s2, NodeId t, std::vector<int>& chosen,
                   const PerturbedWeight& total, BestCut& best, SharedBase* shared) {
  if (best.found && total > best.total) return;
  if (shared && shared->prunes(total)) return;
  std::vector<NodeId> comp = space.component();
  if (!std::binary_search(comp.begin(), comp.end(), s2)) return;
  if (!std::binary_search(comp.begin(), comp.end(), t)) {
    if (beats(best, total, chosen)) {
      best.found = true;
      best.total = total;
      best.elements = chosen;
      best.source_side = std::move(comp);
      if (shared) shared->tighten(total.base());
    }
    return;
  }
  for (std::size_t i = idx; i < space.candidates.size(); ++i) {
    int c = space.candidates[i];
    const PerturbedWeight& w = space.weight_of(c);
    if (w.is_infinite()) continue;
    space.removed[static_cast<std::size_t>(c)] = true;
    chosen.push_back(c);
    subset_search(space, i + 1, s2, t, chosen, total + w, best, shared);
    chosen.pop_back();
    space.removed[static_cast<std::size_t>(c)] = false;
  }
}

CutResult run_oracle(const CutSpace& proto, NodeId s2, NodeId t, Exec exec) {
  BestCut best;
  if (exec == Exec::Serial) {
    CutSpace space = proto;
    std::vector<int> chosen;
    subset_search(space, 0, s2, t, chosen, PerturbedWeight::zero(), best, nullptr);
  } else {
    // One task per first-chosen element, each in a private world; the
    // in-order merge keeps the result schedule-independent.
    std::vector<NodeId> comp = proto.component();
    bool root_s2 = std::binary_search(comp.begin(), comp.end(), s2);
    bool root_t = std::binary_search(comp.begin(), comp.end(), t);
    if (root_s2 && !root_t) {
      best.found = true;
      best.total = PerturbedWeight::zero();
      best.source_side = std::move(comp);
    } else if (root_s2) {
      // Singletons go first and serially: they are cheap, and the bound
      // they leave behind prunes most pair subtrees before they start.
      auto n = static_cast<int>(proto.candidates.size());
      SharedBase shared;
      {
        CutSpace space = proto;
        for (int i = 0; i < n; ++i) {
          int c = proto.candidates[static_cast<std::size_t>(i)];
          const PerturbedWeight& w = proto.weight_of(c);
          if (w.is_infinite()) continue;
          space.removed[static_cast<std::size_t>(c)] = true;
          std::vector<NodeId> comp = space.component();
          if (std::binary_search(comp.begin(), comp.end(), s2) &&
              !std::binary_search(comp.begin(), comp.end(), t) &&
              beats(best, w, {c})) {
            best.found = true;
            best.total = w;
            best.elements = {c};
            best.source_side = std::move(comp);
            shared.tighten(w.base());
          }
          space.removed[static_cast<std::size_t>(c)] = false;
        }
      }

      // One task per leading pair; the merge order is irrelevant because
      // the (value, elements) order is total, so any schedule returns
      // the same cut.
      std::vector<std::pair<int, int>> tasks;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) tasks.emplace_back(i, j);
      std::vector<BestCut> locals(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
        auto [i, j] = tasks[ti];
        int ci = proto.candidates[static_cast<std::size_t>(i)];
        int cj = proto.candidates[static_cast<std::size_t>(j)];
        const PerturbedWeight& wi = proto.weight_of(ci);
        const PerturbedWeight& wj = proto.weight_of(cj);
        if (wi.is_infinite() || wj.is_infinite()) continue;
        CutSpace space = proto;
        space.removed[static_cast<std::size_t>(ci)] = true;
        space.removed[static_cast<std::size_t>(cj)] = true;
        std::vector<int> chosen{ci, cj};
        subset_search(space, static_cast<std::size_t>(j) + 1, s2, t, chosen, wi + wj,
                      locals[ti], &shared);
      }
      for (const BestCut& lb : locals) absorb(best, lb);
    }
  }
  CutResult out;
  out.kind = proto.node_kind ? CutKind::Node : CutKind::Edge;
  if (!best.found) {
    out.total = PerturbedWeight::infinite();
    return out;
  }
  out.elements = std::move(best.elements);
  out.total = std::move(best.total);
  out.source_side = std::move(best.source_side);
  return out;
}

}  // namespace

CutResult oracle_cpmec(const Graph& g, NodeId s1, NodeId s2, NodeId t, int edge_limit, Exec exec) {
  require_distinct_terminals(g, s1, s2, t);
  if (g.edge_count() > edge_limit)
    throw PreconditionError("edge count " + std::to_string(g.edge_count()) +
                            " exceeds the oracle limit " + std::to_string(edge_limit));
  CutSpace space;
  space.g = &g;
  space.s1 = s1;
  space.node_kind = false;
  for (int e = 0; e < g.edge_count(); ++e) space.candidates.push_back(e);
  space.removed.assign(static_cast<std::size_t>(g.edge_count()), false);
  return run_oracle(space, s2, t, exec);
}

CutResult oracle_cpmnc(const Graph& g, NodeId s1, NodeId s2, NodeId t, int node_limit, Exec exec) {
  require_distinct_terminals(g, s1, s2, t);
  CutSpace space;
  space.g = &g;
  space.s1 = s1;
  space.node_kind = true;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (v != s1 && v != s2 && v != t) space.candidates.push_back(v);
  if (static_cast<int>(space.candidates.size()) > node_limit)
    throw PreconditionError("eligible node count " + std::to_string(space.candidates.size()) +
                            " exceeds the oracle limit " + std::to_string(node_limit));
  space.removed.assign(static_cast<std::size_t>(g.node_count()), false);
  return run_oracle(space, s2, t, exec);
}

std::optional<ConstrainedPath> oracle_lcsp(const Graph& g, const Embedding& emb,
                                           const LcspQuery& q, std::int64_t path_limit) {
  validate_lcsp_query(g, emb, q);
  std::vector<bool> forbidden(static_cast<std::size_t>(g.node_count()), false);
  if (q.rule == SideRule::AboveArc) {
    for (NodeId v : emb.face(emb.outer_face()).nodes) forbidden[static_cast<std::size_t>(v)] = true;
    forbidden[static_cast<std::size_t>(q.a)] = false;
    forbidden[static_cast<std::size_t>(q.b)] = false;
  }

  std::optional<ConstrainedPath> best;
  std::int64_t seen = 0;
  std::vector<bool> visited(static_cast<std::size_t>(g.node_count()), false);
  std::vector<NodeId> nodes{q.a};
  std::vector<EdgeId> edges;
  visited[static_cast<std::size_t>(q.a)] = true;

  auto rec = [&](auto&& self, NodeId cur, const PerturbedWeight& total) -> void {
    if (cur == q.b) {
      if (++seen > path_limit)
        throw PreconditionError("simple path count exceeds the oracle limit");
      if (!lcsp_feasible(g, emb, q, edges)) return;
      if (!best || total < best->total || (total == best->total && edges < best->edges))
        best = ConstrainedPath{nodes, edges, total, {}};
      return;
    }
    for (EdgeId e : g.incident(cur)) {
      const Edge& ed = g.edge(e);
      if (ed.weight.is_infinite()) continue;
      NodeId nxt = ed.u == cur ? ed.v : ed.u;
      auto ni = static_cast<std::size_t>(nxt);
      if (visited[ni] || forbidden[ni]) continue;
      visited[ni] = true;
      nodes.push_back(nxt);
      edges.push_back(e);
      self(self, nxt, total + ed.weight);
      edges.pop_back();
      nodes.pop_back();
      visited[ni] = false;
    }
  };
  rec(rec, q.a, PerturbedWeight::zero());
  if (best) best->side_witness = lcsp_side_witness(g, emb, q, best->edges);
  return best;
}

SetCoverSolution oracle_set_cover(const SetCoverInstance& sc) {
  validate_set_cover(sc);
  if (sc.k() > 20)
    throw PreconditionError("set count " + std::to_string(sc.k()) + " exceeds the oracle limit 20");
  // highest set index covering each element, for a quick dead-end test
  std::vector<int> last_owner(static_cast<std::size_t>(sc.n1), -1);
  for (int i = 0; i < sc.k(); ++i)
    for (int x : sc.sets[static_cast<std::size_t>(i)])
      last_owner[static_cast<std::size_t>(x)] =
          std::max(last_owner[static_cast<std::size_t>(x)], i);

  std::vector<int> cover_count(static_cast<std::size_t>(sc.n1), 0);
  int uncovered = sc.n1;
  std::vector<int> chosen;
  bool found = false;
  std::int64_t best_weight = 0;
  std::vector<int> best_sets;

  auto rec = [&](auto&& self, int idx, std::int64_t weight) -> void {
    if (found && weight > best_weight) return;
    if (uncovered == 0) {
      if (!found || weight < best_weight || (weight == best_weight && chosen < best_sets)) {
        found = true;
        best_weight = weight;
        best_sets = chosen;
      }
      return;
    }
    if (idx >= sc.k()) return;
    for (int x = 0; x < sc.n1; ++x)
      if (cover_count[static_cast<std::size_t>(x)] == 0 &&
          last_owner[static_cast<std::size_t>(x)] < idx)
        return;  // an uncovered element only earlier sets could reach
    for (int x : sc.sets[static_cast<std::size_t>(idx)])
      if (cover_count[static_cast<std::size_t>(x)]++ == 0) --uncovered;
    chosen.push_back(idx);
    self(self, idx + 1, weight + sc.weights[static_cast<std::size_t>(idx)]);
    chosen.pop_back();
    for (int x : sc.sets[static_cast<std::size_t>(idx)])
      if (--cover_count[static_cast<std::size_t>(x)] == 0) ++uncovered;
    self(self, idx + 1, weight);
  };
  rec(rec, 0, 0);
  if (!found) throw std::logic_error("validated instance has no cover");
  return SetCoverSolution{std::move(best_sets), best_weight};
}

}  // namespace cpmc
