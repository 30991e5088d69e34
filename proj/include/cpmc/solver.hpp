#pragma once

#include <functional>
#include <vector>

#include "cpmc/exec.hpp"
#include "cpmc/instance.hpp"
#include "cpmc/mincut.hpp"

namespace cpmc {

// Label attached to nodes as the growth solver expands from s1: the cut
// whose source side admitted them, that source side itself, and the
// frontier node whose admission created the label.
struct Region {
  std::vector<NodeId> members;  // source side of cut, ascending
  CutResult cut;
  NodeId anchor = -1;  // s1 for the initial region
};

struct CpmcSolution {
  CutResult cut;
  std::vector<NodeId> preserved;  // component keeping s1 and s2, ascending
  std::vector<NodeId> separated;  // component holding t
  bool feasible() const { return cut.finite(); }
};

// Snapshot passed to the observer after each accepted growth step.
// Pointers refer to solver-owned state and are valid only during the call.
struct GrowthStep {
  int iteration = 0;   // 1-based, step 0 is the initial region
  NodeId v = -1;       // admitted node (-1 for the initial region)
  NodeId s = -1;       // labeled neighbor it was admitted through
  const Region* region = nullptr;               // label created this step
  std::vector<NodeId> grown;                    // nodes newly labeled, ascending
  const std::vector<int>* region_of = nullptr;  // node -> region index, -1 unlabeled
  const std::vector<Region>* regions = nullptr;
};
using GrowthObserver = std::function<void(const GrowthStep&)>;

struct SolveOptions {
  Exec exec = Exec::Serial;
  int jobs = 0;                  // 0 = runtime default when exec is Parallel
  bool allow_nonplanar = false;  // accept instances without an embedding
  GrowthObserver observer;
};

// Minimum-weight node cut separating t from s1 that keeps s1 connected
// to s2, for s1 and s2 on a common face of the instance embedding.  One
// of the two face boundary walks between s1 and s2 survives any valid
// cut, so the answer is the cheaper of the two cuts protecting them.
// Infinite-total solution when no valid cut exists.
CpmcSolution solve_cpmnc_same_face(const PlanarInstance& inst);

// Minimum-weight edge cut separating t from s1 that keeps s1 connected
// to s2.  Grows nested regions from s1, each admission protecting the
// previous source side plus one frontier node; stops when s2 is labeled.
// Requires edge-perturbed weights (distinct cuts must have distinct
// totals) and an embedding unless options.allow_nonplanar is set.
CpmcSolution solve_cpmec_planar(const PlanarInstance& inst, const SolveOptions& options = {});

struct CpeClass {
  Region region;
  std::vector<NodeId> nodes;  // nodes sharing the label, ascending
};

// Runs the growth to exhaustion and groups nodes by label.  Nodes that
// cannot reach s1 without passing t are never admitted and appear in no
// class.  t itself is never labeled.
std::vector<CpeClass> cpe_classes(const PlanarInstance& inst, const SolveOptions& options = {});

}  // namespace cpmc
