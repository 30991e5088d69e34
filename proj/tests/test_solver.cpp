#include <algorithm>
#include <set>
#include <vector>

#include "cpmc/lcsp.hpp"
#include "cpmc/oracle.hpp"
#include "cpmc/solver.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "growth_checks.hpp"

using namespace cpmc;

namespace {

PlanarInstance chain_instance(NodeId s1, NodeId s2, NodeId t, PerturbMode mode) {
  auto p = fixtures::path(5);
  PlanarInstance inst;
  inst.graph = p.graph;
  if (mode != PerturbMode::None) inst.graph = perturb(inst.graph, mode);
  inst.s1 = s1;
  inst.s2 = s2;
  inst.t = t;
  inst.rotations = p.rotations;
  return inst;
}

void check_certificates(const PlanarInstance& inst, const CpmcSolution& sol) {
  REQUIRE(sol.feasible());
  CHECK(std::binary_search(sol.preserved.begin(), sol.preserved.end(), inst.s1));
  CHECK(std::binary_search(sol.preserved.begin(), sol.preserved.end(), inst.s2));
  CHECK(std::binary_search(sol.separated.begin(), sol.separated.end(), inst.t));
  CHECK(!std::binary_search(sol.preserved.begin(), sol.preserved.end(), inst.t));
}

}  // namespace

TEST_CASE("node cut on a chain removes the single gatekeeper") {
  PlanarInstance inst = chain_instance(0, 2, 4, PerturbMode::None);
  auto sol = solve_cpmnc_same_face(inst);
  check_certificates(inst, sol);
  CHECK(sol.cut.kind == CutKind::Node);
  CHECK(sol.cut.elements == std::vector<NodeId>{3});
  CHECK(sol.cut.total == PerturbedWeight::finite(1));
  CHECK(sol.preserved == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("node cut picks the cheap stalk and the far corridor midpoint") {
  auto fix = fixtures::suspended_center();
  PlanarInstance inst;
  inst.graph = fix.graph;
  inst.s1 = 0;
  inst.s2 = 1;
  inst.t = 4;
  inst.rotations = fix.rotations;
  auto sol = solve_cpmnc_same_face(inst);
  check_certificates(inst, sol);
  CHECK(sol.cut.elements == std::vector<NodeId>{3, 5});
  CHECK(sol.cut.total == PerturbedWeight::finite(2));
  auto want = oracle_cpmnc(inst.graph, inst.s1, inst.s2, inst.t);
  CHECK(sol.cut.elements == want.elements);
  CHECK(sol.cut.total == want.total);
}

TEST_CASE("node cut equals the oracle over every grid terminal triple") {
  for (int rows : {2, 3}) {
    auto grid = fixtures::grid(rows, 3);
    Graph g = grid.graph;
    g = perturb(g, PerturbMode::Nodes);
    Embedding emb = validate_embedding(g, grid.rotations);
    fixtures::set_grid_outer(emb, grid);
    std::vector<NodeId> outer_nodes = emb.face(emb.outer_face()).nodes;
    std::sort(outer_nodes.begin(), outer_nodes.end());
    outer_nodes.erase(std::unique(outer_nodes.begin(), outer_nodes.end()), outer_nodes.end());
    for (NodeId s1 : outer_nodes)
      for (NodeId s2 : outer_nodes)
        for (NodeId t = 0; t < g.node_count(); ++t) {
          if (s1 == s2 || t == s1 || t == s2) continue;
          PlanarInstance inst{g, s1, s2, t, grid.rotations, {}};
          auto sol = solve_cpmnc_same_face(inst);
          auto want = oracle_cpmnc(g, s1, s2, t);
          REQUIRE(sol.feasible() == want.finite());
          if (!sol.feasible()) continue;
          CHECK(sol.cut.elements == want.elements);
          CHECK(sol.cut.total == want.total);
        }
  }
}

TEST_CASE("edge cut on a chain takes the lightest tail edge") {
  PlanarInstance inst = chain_instance(0, 2, 4, PerturbMode::Edges);
  auto sol = solve_cpmec_planar(inst);
  check_certificates(inst, sol);
  CHECK(sol.cut.kind == CutKind::Edge);
  CHECK(sol.cut.elements == std::vector<EdgeId>{3});
  CHECK(sol.cut.total.base() == 1);
  auto want = oracle_cpmec(inst.graph, 0, 2, 4);
  CHECK(sol.cut.elements == want.elements);
}

TEST_CASE("edge cut on the chorded square isolates t at weight two") {
  auto fix = fixtures::square_with_chord();
  PlanarInstance inst;
  inst.graph = fix.graph;
  inst.graph = perturb(inst.graph, PerturbMode::Edges);
  inst.s1 = 0;
  inst.s2 = 1;
  inst.t = 2;
  inst.rotations = fix.rotations;
  auto sol = solve_cpmec_planar(inst);
  check_certificates(inst, sol);
  CHECK(sol.cut.total.base() == 2);
  auto want = oracle_cpmec(inst.graph, 0, 1, 2);
  CHECK(sol.cut.elements == want.elements);
  CHECK(sol.cut.total == want.total);
}

TEST_CASE("edge cut growth refuses half-posed instances") {
  CHECK_THROWS_AS(solve_cpmec_planar(chain_instance(0, 2, 4, PerturbMode::None)),
                  PreconditionError);  // unperturbed
  PlanarInstance bare = chain_instance(0, 2, 4, PerturbMode::Edges);
  bare.rotations.reset();
  CHECK_THROWS_AS(solve_cpmec_planar(bare), PreconditionError);  // no embedding
  SolveOptions unsafe;
  unsafe.allow_nonplanar = true;
  auto sol = solve_cpmec_planar(bare, unsafe);
  CHECK(sol.cut.elements == std::vector<EdgeId>{3});
}

TEST_CASE("edge cut reports infeasible when the partner sits behind t") {
  PlanarInstance inst = chain_instance(0, 4, 2, PerturbMode::Edges);
  auto sol = solve_cpmec_planar(inst);
  CHECK(!sol.feasible());
  CHECK(!solve_cpmnc_same_face(chain_instance(0, 4, 2, PerturbMode::None)).feasible());
}

TEST_CASE("edge cut equals the oracle over grid terminal triples") {
  for (int rows : {2, 3}) {
    auto grid = fixtures::grid(rows, 3);
    Graph g = grid.graph;
    g = perturb(g, PerturbMode::Edges);
    int n = g.node_count();
    for (NodeId s1 = 0; s1 < n; ++s1)
      for (NodeId s2 = 0; s2 < n; ++s2)
        for (NodeId t = 0; t < n; ++t) {
          if (s1 == s2 || t == s1 || t == s2) continue;
          PlanarInstance inst{g, s1, s2, t, grid.rotations, {}};
          auto sol = solve_cpmec_planar(inst);
          auto want = oracle_cpmec(g, s1, s2, t);
          REQUIRE(sol.feasible() == want.finite());
          if (!sol.feasible()) continue;
          CHECK(sol.cut.elements == want.elements);
          CHECK(sol.cut.total == want.total);
          check_certificates(inst, sol);
        }
  }
}

TEST_CASE("parallel frontier evaluation returns the serial answer") {
  auto grid = fixtures::grid(3, 3);
  Graph g = grid.graph;
  g = perturb(g, PerturbMode::Edges);
  PlanarInstance inst{g, 0, 8, 4, grid.rotations, {}};
  auto serial = solve_cpmec_planar(inst);
  SolveOptions par;
  par.exec = Exec::Parallel;
  par.jobs = 4;
  auto parallel = solve_cpmec_planar(inst, par);
  CHECK(serial.cut.elements == parallel.cut.elements);
  CHECK(serial.cut.total == parallel.cut.total);
}

TEST_CASE("growth invariants hold along the way") {
  auto grid = fixtures::grid(3, 3);
  Graph g = grid.graph;
  g = perturb(g, PerturbMode::Edges);
  Embedding emb = validate_embedding(g, grid.rotations);
  // the solver reroots the outer face to t; mirror that for the checks
  for (NodeId t : {0, 4, 7}) {
    NodeId s1 = t == 0 ? 6 : 0;
    NodeId s2 = t == 0 ? 2 : 8;
    PlanarInstance inst{g, s1, s2, t, grid.rotations, {}};
    std::vector<growth_checks::StepRecord> steps;
    SolveOptions opt;
    opt.observer = growth_checks::recorder(steps);
    auto sol = solve_cpmec_planar(inst, opt);
    REQUIRE(sol.feasible());
    REQUIRE(!steps.empty());
    CHECK(growth_checks::values_monotone(steps));
    CHECK(growth_checks::regions_nested(steps));
    Embedding rooted = reroot_outer_face(emb, t);
    CHECK(growth_checks::no_hole_throughout(g, rooted, steps));
  }
}

TEST_CASE("equal-cut labels collapse to a single class on a chain") {
  auto p = fixtures::path(3);
  PlanarInstance inst;
  inst.graph = p.graph;
  inst.graph = perturb(inst.graph, PerturbMode::Edges);
  inst.s1 = 0;
  inst.s2 = 1;
  inst.t = 2;
  inst.rotations = p.rotations;
  auto classes = cpe_classes(inst);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].nodes == std::vector<NodeId>{0, 1});
  CHECK(classes[0].region.cut.elements == std::vector<EdgeId>{1});
}

TEST_CASE("star leaves land in the center's class") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g = perturb(g, PerturbMode::Edges);
  PlanarInstance inst;
  inst.graph = g;
  inst.s1 = 0;
  inst.s2 = 1;
  inst.t = 3;
  inst.rotations = std::vector<std::vector<EdgeId>>{{0, 1, 2}, {0}, {1}, {2}};
  auto classes = cpe_classes(inst);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].nodes == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("classes partition everything but t") {
  auto grid = fixtures::grid(2, 3);
  Graph g = grid.graph;
  g = perturb(g, PerturbMode::Edges);
  for (NodeId t : {0, 2, 4}) {
    NodeId s1 = t == 0 ? 5 : 0;
    NodeId s2 = t == 2 ? 3 : (t == 0 ? 1 : 2);
    PlanarInstance inst{g, s1, s2, t, grid.rotations, {}};
    auto classes = cpe_classes(inst);
    std::set<NodeId> seen;
    std::size_t total = 0;
    for (const auto& cls : classes) {
      total += cls.nodes.size();
      seen.insert(cls.nodes.begin(), cls.nodes.end());
    }
    CHECK(total == static_cast<std::size_t>(g.node_count() - 1));
    CHECK(seen.size() == total);
    CHECK(seen.count(t) == 0);
    // discovery order carries non-decreasing cut values
    for (std::size_t i = 1; i < classes.size(); ++i)
      CHECK(!(classes[i].region.cut.total < classes[i - 1].region.cut.total));
  }
}

TEST_CASE("dual-route edge cut matches the growth solver on anchors") {
  PlanarInstance chain = chain_instance(0, 2, 4, PerturbMode::Edges);
  auto via_dual = solve_cpmec_same_face(chain);
  auto via_growth = solve_cpmec_planar(chain);
  check_certificates(chain, via_dual);
  CHECK(via_dual.cut.elements == via_growth.cut.elements);
  CHECK(via_dual.cut.total == via_growth.cut.total);

  auto fix = fixtures::square_with_chord();
  PlanarInstance square;
  square.graph = fix.graph;
  square.graph = perturb(square.graph, PerturbMode::Edges);
  square.s1 = 0;
  square.s2 = 1;
  square.t = 2;
  square.rotations = fix.rotations;
  auto sd = solve_cpmec_same_face(square);
  auto sg = solve_cpmec_planar(square);
  CHECK(sd.cut.elements == sg.cut.elements);
  CHECK(sd.cut.total == sg.cut.total);
}

TEST_CASE("dual-route edge cut crosses bridges and pendant partners") {
  // triangle 0-1-2 with a pendant chain 2-3: s2 reachable only across
  // the bridge, whose removal is never affordable
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  g = perturb(g, PerturbMode::Edges);
  PlanarInstance inst;
  inst.graph = g;
  inst.s1 = 0;
  inst.s2 = 3;
  inst.t = 1;
  inst.rotations = std::vector<std::vector<EdgeId>>{{0, 2}, {0, 1}, {1, 3, 2}, {3}};
  auto sol = solve_cpmec_same_face(inst);
  check_certificates(inst, sol);
  auto want = oracle_cpmec(g, 0, 3, 1);
  CHECK(sol.cut.elements == want.elements);
  CHECK(sol.cut.total == want.total);

  auto growth = solve_cpmec_planar(inst);
  CHECK(sol.cut.elements == growth.cut.elements);
}

TEST_CASE("dual-route edge cut reports infeasible partners") {
  PlanarInstance inst = chain_instance(0, 4, 2, PerturbMode::Edges);
  CHECK(!solve_cpmec_same_face(inst).feasible());
}

TEST_CASE("dual route equals growth route across grid triples") {
  auto grid = fixtures::grid(2, 3);
  Graph g = grid.graph;
  g = perturb(g, PerturbMode::Edges);
  int n = g.node_count();
  for (NodeId s1 = 0; s1 < n; ++s1)
    for (NodeId t = 0; t < n; ++t) {
      if (s1 == t) continue;
      for (NodeId s2 = 0; s2 < n; ++s2) {
        if (s2 == s1 || s2 == t) continue;
        PlanarInstance inst{g, s1, s2, t, grid.rotations, {}};
        auto dual = solve_cpmec_same_face(inst);
        auto growth = solve_cpmec_planar(inst);
        REQUIRE(dual.feasible() == growth.feasible());
        if (!dual.feasible()) continue;
        CHECK(dual.cut.elements == growth.cut.elements);
        CHECK(dual.cut.total == growth.cut.total);
      }
    }
}
