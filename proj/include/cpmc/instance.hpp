#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpmc/graph.hpp"

namespace cpmc {

// A solver input: graph, the three terminals, and (usually) a combinatorial
// embedding given as per-node rotations.  Weights are plain integers here;
// solvers that need tie-breaking perturbation apply it themselves.
struct PlanarInstance {
  Graph graph;
  NodeId s1 = -1;  // source, stays connected to s2
  NodeId s2 = -1;  // partner that must keep reaching s1
  NodeId t = -1;   // node to separate
  std::optional<std::vector<std::vector<EdgeId>>> rotations;
  std::map<std::string, std::string> metadata;
};

}  // namespace cpmc
