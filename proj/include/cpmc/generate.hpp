#pragma once

#include <cstdint>
#include <random>

#include "cpmc/instance.hpp"

namespace cpmc {

// Deterministic instance generators for the test corpus.  All
// randomness comes from a caller-seeded std::mt19937 consumed through
// raw outputs and explicit modulo, so a seed reproduces the same
// instance bytes on any platform.

// rows x cols node grid, row-major ids, node (r,c) drawn at (c,r).
// Horizontal edges first (r*(cols-1)+c for (r,c)-(r,c+1)), then
// vertical (rows*(cols-1)+r*cols+c for (r,c)-(r+1,c)); rotations
// counterclockwise E,N,W,S.  Terminals default to s1 = bottom-left,
// s2 = bottom-right, t = top-right.  Metadata records the outer face.
// Requires 2 <= rows, cols <= 12.
PlanarInstance gen_grid(int rows, int cols);

// Chain 0-1-...-(n-1) with s1 = 0, s2 = the middle node, t = n-1;
// n = 5 gives the canonical five-node fixture.  Requires 3 <= n <= 50.
PlanarInstance gen_path(int n);

// Connected planar instance with the exact node and edge counts:
// triangulates random integer points (general position enforced by
// resampling), reads rotations off the coordinates, then removes
// random non-tree edges until `edges` remain.  Terminals are three
// distinct random nodes.  Requires 3 <= nodes <= 30 and
// nodes-1 <= edges <= 3*nodes-6.
PlanarInstance gen_random_planar(int nodes, int edges, std::uint32_t seed);

// Which terminal pair must share a face when re-picking terminals.
enum class CofacialPair { None, S1S2, S1T };

// Re-picks the instance terminals in place: the requested pair lands on
// a common face of the instance embedding (distinct nodes), the third
// terminal anywhere else.  Requires rotations and >= 3 nodes.
void pick_terminals(PlanarInstance& inst, CofacialPair pair, std::mt19937& rng);

// Overwrites weights with uniform draws from [lo, hi] in element order.
void randomize_edge_weights(PlanarInstance& inst, std::int64_t lo, std::int64_t hi,
                            std::mt19937& rng);
void randomize_node_weights(PlanarInstance& inst, std::int64_t lo, std::int64_t hi,
                            std::mt19937& rng);

}  // namespace cpmc
