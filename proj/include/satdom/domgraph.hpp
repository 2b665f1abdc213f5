#pragma once

#include <cstdint>
#include <vector>

#include "satdom/grid.hpp"
#include "satdom/report.hpp"
#include "satdom/tilings.hpp"

namespace satdom {

// Board adjacency graph: vertex i is board.cells()[i], edges are on-board
// grid adjacency. Neighbor lists are sorted.
struct AdjacencyGraph {
  Board board;
  std::vector<std::vector<int>> adj;

  int size() const { return static_cast<int>(adj.size()); }
};

AdjacencyGraph adjacency_graph(const Board& b);

struct DominatingSet {
  std::vector<int> members;  // sorted vertex indices
};

// Closed-neighborhood domination check.
bool dominates(const AdjacencyGraph& g, const DominatingSet& d);

// Exact minimum dominating set by branch and bound. Branches on the least
// undominated vertex; candidates are its closed neighborhood in decreasing
// residual-coverage order; lower bound ceil(undominated / (maxdeg + 1));
// initial upper bound from a greedy max-coverage pass. Deterministic.
SolveReport<DominatingSet> gamma_exact(const AdjacencyGraph& g,
                                       std::uint64_t node_budget = kDefaultNodeBudget);

// gamma of the m x n grid graph by column-sweep profile DP, three states per
// cell (in set / dominated / awaiting domination), cell-by-cell transitions.
// Guarded to m <= 14.
long long gamma_rect_dp(int m, long long n);

inline constexpr int kRectDpMaxRows = 14;

// DP value plus a minimum dominating set reconstructed from stored DP
// layers. Falls back to value-only when the layers would not fit the memory
// budget.
struct RectDpResult {
  long long value = 0;
  bool has_witness = false;
  std::vector<Cell> members;
};

RectDpResult gamma_rect_dp_with_witness(int m, long long n,
                                        std::size_t memory_budget_bytes = 512u << 20);

// Star partition of the vertex set from a dominating set: every non-member
// is assigned to an adjacent member, then spokeless members are absorbed
// into adjacent pieces. At most |d| fragments. Requires d to dominate g and
// g to have no isolated vertices.
FragmentTiling star_partition(const AdjacencyGraph& g, const DominatingSet& d);

}  // namespace satdom
