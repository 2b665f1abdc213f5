#pragma once

#include "satdom/domgraph.hpp"
#include "satdom/grid.hpp"

namespace satdom::oracle {

// Deliberately simple exponential references, kept independent of the
// optimized solvers (separate adjacency computation, no shared search code).
// Scale guards are hard errors.

// Minimum dominating set size by subset enumeration in increasing
// cardinality. Guard: at most 20 vertices.
int brute_gamma(const AdjacencyGraph& g);

// Minimum number of disjoint fragments partitioning b, by exhaustive exact
// cover over all fragments. Guard: at most 16 cells; no isolated cells.
int brute_min_tiling(const Board& b);

// Maximum size of a saturated domino covering, over all subsets of the
// board's dominoes. Guard: at most 24 dominoes; no isolated cells.
int brute_max_saturated(const Board& b);

// Minimum number of maximal-fragment centers covering b, by
// cardinality-increasing enumeration over ambient center subsets.
// Guard: at most 28 candidate centers.
int brute_x(const Board& b);

}  // namespace satdom::oracle
