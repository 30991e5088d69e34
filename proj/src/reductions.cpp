#include "cpmc/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace cpmc {

void validate_set_cover(const SetCoverInstance& sc) {
  if (sc.n1 < 0) throw PreconditionError("negative ground set size");
  if (sc.weights.size() != sc.sets.size())
    throw PreconditionError("set cover needs exactly one weight per set");
  for (std::int64_t w : sc.weights)
    if (w < 1) throw PreconditionError("set weights must be positive");
  std::vector<bool> covered(static_cast<std::size_t>(sc.n1), false);
  for (const auto& s : sc.sets) {
    std::vector<bool> seen(static_cast<std::size_t>(sc.n1), false);
    for (int x : s) {
      if (x < 0 || x >= sc.n1)
        throw PreconditionError("element id out of range: " + std::to_string(x));
      if (seen[static_cast<std::size_t>(x)])
        throw PreconditionError("duplicate element " + std::to_string(x) + " inside a set");
      seen[static_cast<std::size_t>(x)] = true;
      covered[static_cast<std::size_t>(x)] = true;
    }
  }
  for (int x = 0; x < sc.n1; ++x)
    if (!covered[static_cast<std::size_t>(x)])
      throw PreconditionError("element " + std::to_string(x) + " is in no set");
}

ReductionArtifact build_cpmnc_from_set_cover(const SetCoverInstance& sc,
                                             std::optional<std::int64_t> d1) {
  validate_set_cover(sc);
  if (sc.n1 < 1) throw PreconditionError("the gadget chain needs at least one element");
  if (sc.k() < 1) throw PreconditionError("the gadget chain needs at least one set");
  ReductionArtifact art;
  int k = sc.k();
  art.scale = static_cast<std::int64_t>(sc.n1) * k;
  art.d1 = d1 ? *d1 : std::accumulate(sc.weights.begin(), sc.weights.end(), std::int64_t{0});
  if (art.d1 < 1) throw PreconditionError("cover weight bound must be positive");
  art.budget = art.scale * art.d1 + art.scale - 1;

  Graph g;
  for (int i = 0; i <= sc.n1; ++i) art.endpoints.push_back(g.add_node());
  art.internals_of_element.resize(static_cast<std::size_t>(sc.n1));
  for (int e = 0; e < sc.n1; ++e)
    for (int i = 0; i < k; ++i)
      if (std::find(sc.sets[static_cast<std::size_t>(i)].begin(),
                    sc.sets[static_cast<std::size_t>(i)].end(),
                    e) != sc.sets[static_cast<std::size_t>(i)].end())
        art.internals_of_element[static_cast<std::size_t>(e)].emplace_back(i, g.add_node());
  for (int i = 0; i < k; ++i)
    art.hub_of_set.push_back(
        g.add_node(PerturbedWeight::finite(sc.weights[static_cast<std::size_t>(i)] * art.scale)));
  art.t = g.add_node();

  for (int e = 0; e < sc.n1; ++e)
    for (const auto& [set_id, node] : art.internals_of_element[static_cast<std::size_t>(e)]) {
      g.add_edge(art.endpoints[static_cast<std::size_t>(e)], node);
      g.add_edge(node, art.endpoints[static_cast<std::size_t>(e) + 1]);
      g.add_edge(node, art.hub_of_set[static_cast<std::size_t>(set_id)]);
    }
  for (int i = 0; i < k; ++i)
    g.add_edge(art.hub_of_set[static_cast<std::size_t>(i)], art.t);

  art.s1 = art.endpoints.front();
  art.s2 = art.endpoints.back();
  art.graph = std::move(g);
  return art;
}

std::pair<std::vector<int>, std::int64_t> extract_cover(const ReductionArtifact& art,
                                                        const CutResult& cut) {
  const Graph& g = art.graph;
  if (cut.kind != CutKind::Node) throw PreconditionError("cover extraction expects a node cut");
  std::vector<bool> removed(static_cast<std::size_t>(g.node_count()), false);
  for (int v : cut.elements) {
    if (!g.has_node(v)) throw PreconditionError("cut names a node outside the artifact");
    if (v == art.s1 || v == art.s2 || v == art.t)
      throw PreconditionError("cut touches a terminal");
    removed[static_cast<std::size_t>(v)] = true;
  }
  std::vector<NodeId> comp = connected_component(g, art.s1, removed, {});
  if (!std::binary_search(comp.begin(), comp.end(), art.s2))
    throw PreconditionError("cut does not preserve s1-s2");
  if (std::binary_search(comp.begin(), comp.end(), art.t))
    throw PreconditionError("cut does not separate t");

  std::vector<int> cover;
  std::int64_t weight = 0;
  for (int i = 0; i < static_cast<int>(art.hub_of_set.size()); ++i) {
    NodeId hub = art.hub_of_set[static_cast<std::size_t>(i)];
    if (!removed[static_cast<std::size_t>(hub)]) continue;
    cover.push_back(i);
    std::int64_t scaled = g.node_weight(hub).base();
    if (art.scale <= 0 || scaled % art.scale != 0)
      throw std::logic_error("hub weight is not a multiple of the scale");
    weight += scaled / art.scale;
  }
  for (std::size_t e = 0; e < art.internals_of_element.size(); ++e) {
    bool ok = false;
    for (const auto& [set_id, node] : art.internals_of_element[e])
      if (std::binary_search(cover.begin(), cover.end(), set_id)) ok = true;
    if (!ok) throw std::logic_error("valid cut left element " + std::to_string(e) + " uncovered");
  }
  return {std::move(cover), weight};
}

UnitWeightGraph to_unit_weight(const Graph& g, const std::vector<NodeId>& keep_single) {
  std::vector<bool> keep(static_cast<std::size_t>(g.node_count()), false);
  for (NodeId v : keep_single) {
    if (!g.has_node(v)) throw PreconditionError("keep-single node id out of range");
    keep[static_cast<std::size_t>(v)] = true;
  }
  UnitWeightGraph out;
  out.clique_of.resize(static_cast<std::size_t>(g.node_count()));
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const PerturbedWeight& w = g.node_weight(v);
    if (w.is_infinite()) throw PreconditionError("unit expansion needs finite node weights");
    if (!w.eps_terms().empty())
      throw PreconditionError("unit expansion needs unperturbed node weights");
    if (w.base() < 1) throw PreconditionError("unit expansion needs positive node weights");
    std::int64_t copies = keep[static_cast<std::size_t>(v)] ? 1 : w.base();
    auto& clique = out.clique_of[static_cast<std::size_t>(v)];
    for (std::int64_t j = 0; j < copies; ++j) {
      clique.push_back(out.graph.add_node());
      out.original_of.push_back(v);
    }
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b)
        out.graph.add_edge(clique[a], clique[b]);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    for (NodeId a : out.clique_of[static_cast<std::size_t>(ed.u)])
      for (NodeId b : out.clique_of[static_cast<std::size_t>(ed.v)]) out.graph.add_edge(a, b);
  }
  return out;
}

Graph to_bipartite(const ReductionArtifact& art) {
  const Graph& g = art.graph;
  std::vector<int> color(static_cast<std::size_t>(g.node_count()), -1);
  for (NodeId start = 0; start < g.node_count(); ++start) {
    if (color[static_cast<std::size_t>(start)] >= 0) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::queue<NodeId> bfs;
    bfs.push(start);
    while (!bfs.empty()) {
      NodeId x = bfs.front();
      bfs.pop();
      for (EdgeId e : g.incident(x)) {
        NodeId y = g.other_end(e, x);
        if (color[static_cast<std::size_t>(y)] < 0) {
          color[static_cast<std::size_t>(y)] = 1 - color[static_cast<std::size_t>(x)];
          bfs.push(y);
        } else if (color[static_cast<std::size_t>(y)] == color[static_cast<std::size_t>(x)]) {
          throw std::logic_error("artifact graph is not bipartite");
        }
      }
    }
  }
  return g;
}

}  // namespace cpmc
