#include "cpmc/solver.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "cpmc/embedding.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cpmc {

int resolve_jobs(int requested) {
#ifdef _OPENMP
  if (requested > 0) return requested;
  return omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

namespace {

CpmcSolution infeasible_solution(CutKind kind) {
  CpmcSolution out;
  out.cut.kind = kind;
  out.cut.total = PerturbedWeight::infinite();
  return out;
}

CpmcSolution certify(const Graph& g, const PlanarInstance& inst, CutResult cut) {
  CpmcSolution out;
  std::vector<bool> removed_nodes, removed_edges;
  if (cut.kind == CutKind::Edge) {
    removed_edges.assign(static_cast<std::size_t>(g.edge_count()), false);
    for (int e : cut.elements) removed_edges[static_cast<std::size_t>(e)] = true;
  } else {
    removed_nodes.assign(static_cast<std::size_t>(g.node_count()), false);
    for (int v : cut.elements) removed_nodes[static_cast<std::size_t>(v)] = true;
  }
  out.preserved = connected_component(g, inst.s1, removed_nodes, removed_edges);
  out.separated = connected_component(g, inst.t, removed_nodes, removed_edges);
  out.cut = std::move(cut);
  if (std::binary_search(out.preserved.begin(), out.preserved.end(), inst.t))
    throw std::logic_error("cut failed to separate t");
  if (!std::binary_search(out.preserved.begin(), out.preserved.end(), inst.s2))
    throw std::logic_error("cut failed to preserve s1-s2");
  return out;
}

struct Growth {
  std::vector<Region> regions;
  std::vector<int> region_of;  // node -> region index, -1 unlabeled
};

// Region growth from s1.  Stops as soon as stop_at is labeled (pass -1
// to exhaust the frontier).  Regions with identical cuts share one slot:
// a node's class is the component it shares with s1, not the step that
// found it.
Growth grow_regions(const Graph& g, NodeId s1, NodeId t, NodeId stop_at,
                    const SolveOptions& options) {
  Growth gr;
  gr.region_of.assign(static_cast<std::size_t>(g.node_count()), -1);
  std::map<std::vector<int>, int> region_by_cut;

  auto label_with = [&](const CutResult& cut, NodeId anchor) {
    auto it = region_by_cut.find(cut.elements);
    int idx;
    if (it != region_by_cut.end()) {
      idx = it->second;
    } else {
      idx = static_cast<int>(gr.regions.size());
      gr.regions.push_back(Region{cut.source_side, cut, anchor});
      region_by_cut.emplace(cut.elements, idx);
    }
    std::vector<NodeId> grown;
    for (NodeId x : gr.regions[static_cast<std::size_t>(idx)].members)
      if (gr.region_of[static_cast<std::size_t>(x)] < 0) {
        gr.region_of[static_cast<std::size_t>(x)] = idx;
        grown.push_back(x);
      }
    return std::pair<int, std::vector<NodeId>>(idx, std::move(grown));
  };

  CutResult first = min_edge_cut(g, s1, t);
  // the initial label covers s1 alone; its component joins region by
  // region as the frontier confirms each node's own cut
  int idx0 = static_cast<int>(gr.regions.size());
  gr.regions.push_back(Region{first.source_side, first, s1});
  region_by_cut.emplace(first.elements, idx0);
  gr.region_of[static_cast<std::size_t>(s1)] = idx0;
  if (options.observer) {
    GrowthStep step;
    step.iteration = 0;
    step.region = &gr.regions[static_cast<std::size_t>(idx0)];
    step.grown = {s1};
    step.region_of = &gr.region_of;
    step.regions = &gr.regions;
    options.observer(step);
  }

  int iteration = 0;
  while (stop_at < 0 || gr.region_of[static_cast<std::size_t>(stop_at)] < 0) {
    ++iteration;
    std::vector<std::pair<NodeId, NodeId>> pairs;  // (v, s)
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (v == t || gr.region_of[static_cast<std::size_t>(v)] >= 0) continue;
      for (EdgeId e : g.incident(v)) {
        NodeId s = g.other_end(e, v);
        if (gr.region_of[static_cast<std::size_t>(s)] >= 0) pairs.emplace_back(v, s);
      }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    if (pairs.empty()) {
      if (stop_at < 0) break;
      throw std::logic_error("frontier exhausted before reaching s2");
    }

    std::vector<CutResult> cuts(pairs.size());
    auto eval = [&](std::size_t i) {
      const auto& [v, s] = pairs[i];
      const Region& rs = gr.regions[static_cast<std::size_t>(
          gr.region_of[static_cast<std::size_t>(s)])];
      cuts[i] = min_cut_from_set(g, rs.members, v, t, CutKind::Edge);
    };
    if (options.exec == Exec::Parallel) {
#ifdef _OPENMP
      int jobs = resolve_jobs(options.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
      for (std::size_t i = 0; i < pairs.size(); ++i) eval(i);
#else
      for (std::size_t i = 0; i < pairs.size(); ++i) eval(i);
#endif
    } else {
      for (std::size_t i = 0; i < pairs.size(); ++i) eval(i);
    }

    std::size_t pick = 0;
    for (std::size_t i = 1; i < pairs.size(); ++i)
      if (cuts[i].total < cuts[pick].total) pick = i;  // pairs sorted: ties keep smaller (v,s)

    auto [idx, grown] = label_with(cuts[pick], pairs[pick].first);
    if (options.observer) {
      GrowthStep step;
      step.iteration = iteration;
      step.v = pairs[pick].first;
      step.s = pairs[pick].second;
      step.region = &gr.regions[static_cast<std::size_t>(idx)];
      step.grown = grown;
      step.region_of = &gr.region_of;
      step.regions = &gr.regions;
      options.observer(step);
    }
  }
  return gr;
}

void check_growth_preconditions(const PlanarInstance& inst, const SolveOptions& options) {
  require_distinct_terminals(inst.graph, inst.s1, inst.s2, inst.t);
  if (inst.graph.perturb_mode() != PerturbMode::Edges)
    throw PreconditionError("edge-perturbed weights required (distinct cuts must compare unequal)");
  if (inst.rotations) {
    Embedding emb = validate_embedding(inst.graph, *inst.rotations);
    reroot_outer_face(emb, inst.t);  // t must lie on some face; keeps inputs honest
  } else if (!options.allow_nonplanar) {
    throw PreconditionError("embedding required (allow_nonplanar bypasses at your own risk)");
  }
}

}  // namespace

CpmcSolution solve_cpmnc_same_face(const PlanarInstance& inst) {
  const Graph& g = inst.graph;
  require_distinct_terminals(g, inst.s1, inst.s2, inst.t);
  if (!inst.rotations) throw PreconditionError("embedding required for the same-face cut solver");
  Embedding emb = validate_embedding(g, *inst.rotations);
  auto shared = same_face(emb, inst.s1, inst.s2);
  if (!shared) throw PreconditionError("s1 and s2 share no face");
  if (!is_feasible_cpmnc(g, inst.s1, inst.s2, inst.t)) return infeasible_solution(CutKind::Node);

  auto [walk_a, walk_b] = boundary_paths(emb, *shared, inst.s1, inst.s2);
  auto protect_and_cut = [&](const std::vector<NodeId>& walk) {
    std::vector<NodeId> nodes = walk;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (std::binary_search(nodes.begin(), nodes.end(), inst.t)) {
      CutResult blocked;
      blocked.kind = CutKind::Node;
      blocked.total = PerturbedWeight::infinite();
      return blocked;
    }
    return min_cut_from_set(g, nodes, std::nullopt, inst.t, CutKind::Node);
  };
  CutResult x1 = protect_and_cut(walk_a);
  CutResult x2 = protect_and_cut(walk_b);
  const CutResult& chosen = x2.total < x1.total ? x2 : x1;
  if (!chosen.finite()) return infeasible_solution(CutKind::Node);
  return certify(g, inst, chosen);
}

CpmcSolution solve_cpmec_planar(const PlanarInstance& inst, const SolveOptions& options) {
  const Graph& g = inst.graph;
  check_growth_preconditions(inst, options);
  if (!is_feasible_cpmec(g, inst.s1, inst.s2, inst.t)) return infeasible_solution(CutKind::Edge);
  Growth gr = grow_regions(g, inst.s1, inst.t, inst.s2, options);
  const Region& answer =
      gr.regions[static_cast<std::size_t>(gr.region_of[static_cast<std::size_t>(inst.s2)])];
  return certify(g, inst, answer.cut);
}

std::vector<CpeClass> cpe_classes(const PlanarInstance& inst, const SolveOptions& options) {
  const Graph& g = inst.graph;
  check_growth_preconditions(inst, options);
  Growth gr = grow_regions(g, inst.s1, inst.t, -1, options);
  std::vector<CpeClass> classes(gr.regions.size());
  for (std::size_t i = 0; i < gr.regions.size(); ++i) classes[i].region = gr.regions[i];
  for (NodeId v = 0; v < g.node_count(); ++v) {
    int idx = gr.region_of[static_cast<std::size_t>(v)];
    if (idx >= 0) classes[static_cast<std::size_t>(idx)].nodes.push_back(v);
  }
  classes.erase(std::remove_if(classes.begin(), classes.end(),
                               [](const CpeClass& c) { return c.nodes.empty(); }),
                classes.end());
  return classes;
}

}  // namespace cpmc
