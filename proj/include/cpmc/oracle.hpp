#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cpmc/exec.hpp"
#include "cpmc/lcsp.hpp"
#include "cpmc/mincut.hpp"
#include "cpmc/reductions.hpp"

namespace cpmc {

// Exhaustive reference solvers.  Exponential by design; each refuses
// inputs past its size guard with PreconditionError.  Deterministic:
// ties fall to the lexicographically smaller element list, independent
// of the execution policy.

// Minimum-weight edge set whose removal separates t from s1 and keeps
// s1-s2 connected.  Branch and bound over edge subsets; Infinite-total
// result when no valid cut exists.  Guard: edge_count <= edge_limit.
CutResult oracle_cpmec(const Graph& g, NodeId s1, NodeId s2, NodeId t, int edge_limit = 20,
                       Exec exec = Exec::Serial);

// Same for node sets drawn from V minus the terminals.
// Guard: eligible node count <= node_limit.
CutResult oracle_cpmnc(const Graph& g, NodeId s1, NodeId s2, NodeId t, int node_limit = 20,
                       Exec exec = Exec::Serial);

// Enumerates every simple a-b path honoring the query's intermediate
// rule, filters by the side rule, returns the minimum.  Guard: gives up
// past path_limit enumerated paths.
std::optional<ConstrainedPath> oracle_lcsp(const Graph& g, const Embedding& emb,
                                           const LcspQuery& q,
                                           std::int64_t path_limit = 2000000);

struct SetCoverSolution {
  std::vector<int> sets;  // ascending
  std::int64_t weight = 0;
};

// Optimal weighted set cover over all subsets.  Guard: k() <= 20.
SetCoverSolution oracle_set_cover(const SetCoverInstance& sc);

}  // namespace cpmc
