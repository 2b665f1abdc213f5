#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satdom/grid.hpp"
#include "satdom/report.hpp"

namespace satdom {

// A star-shaped tile: a center cell plus 1..neighbor_count(kind) spokes,
// each adjacent to the center. Two-cell fragments are stored with the
// lexicographically lesser cell as center.
struct Fragment {
  Cell center;
  std::vector<Cell> spokes;  // sorted, nonempty, distinct from center

  // All cells of the fragment, sorted.
  std::vector<Cell> cells() const;
  int size() const { return 1 + static_cast<int>(spokes.size()); }
};

// Validating constructor; canonicalizes the 2-cell center.
Fragment make_fragment(GridKind kind, Cell center, std::vector<Cell> spokes);

struct FragmentTiling {
  Board board;
  std::vector<Fragment> fragments;
};

// nullopt when valid, otherwise a description of the first problem found.
std::optional<std::string> check_tiling(const FragmentTiling& t);
void validate_tiling(const FragmentTiling& t);  // throws ValidationError

// Two adjacent cells, stored with a < b.
struct Domino {
  Cell a;
  Cell b;
  auto operator<=>(const Domino&) const = default;
};

Domino make_domino(GridKind kind, Cell x, Cell y);
std::string to_string(const Domino& d);

struct DominoCovering {
  Board board;
  std::vector<Domino> dominoes;  // sorted, unique
};

// Full construction-time validation: distinct dominoes, adjacency, cells on
// board, every board cell covered. Duplicate dominoes get a distinct error
// (two coincident dominoes are trivially redundant).
DominoCovering make_domino_covering(Board board, std::vector<Domino> dominoes);
std::optional<std::string> check_covering(const DominoCovering& c);
void validate_covering(const DominoCovering& c);

struct SaturationResult {
  bool saturated = false;
  // Lexicographically least removable domino; set iff !saturated.
  std::optional<Domino> redundant;
};

// A covering is saturated iff every domino covers some cell no other domino
// covers. Throws ValidationError (naming an uncovered cell) if c is not a
// covering of its board.
SaturationResult is_saturated(const DominoCovering& c);

// f(B): minimum number of fragments tiling b, witness included. Computed as
// the domination number of the board's adjacency graph with a star partition
// extracted from the witness dominating set.
SolveReport<FragmentTiling> minimal_fragment_tiling(
    const Board& b, std::uint64_t node_budget = kDefaultNodeBudget);

// d(B) = |B| - f(B): size of the largest saturated domino covering.
// Throws CapacityError if the search exhausts its budget.
int d_value(const Board& b, std::uint64_t node_budget = kDefaultNodeBudget);

// One domino per (center, spoke) pair; |dominoes| = |B| - #fragments.
DominoCovering tiling_to_saturated(const FragmentTiling& t);

// Components of the domino graph of a saturated covering, each a star.
// Throws ValidationError naming a redundant domino if c is not saturated.
FragmentTiling saturated_to_tiling(const DominoCovering& c);

// True iff every covering of the n x n board by exactly k dominoes contains
// a redundant domino. Exhaustive enumeration; n <= 4.
bool brute_check_radoicic(int n, int k);

namespace detail {

// A star piece under construction: the designated center plus all its cells
// (center included). Singleton pieces are absorbed into neighbors the way
// an isolated cell merges with an adjacent fragment: join another singleton
// into a domino, join a center as an extra spoke, or split a spoke off its
// fragment to pair with the singleton.
struct StarPiece {
  Cell center;
  std::vector<Cell> cells;  // sorted, contains center
};

// Input pieces must partition a subset of the board; every piece's non-center
// cells must be adjacent to its center. Returns pieces of size >= 2 covering
// the same cells. Requires every singleton to have a board neighbor inside
// the covered cell set.
std::vector<StarPiece> absorb_singletons(const Board& b, std::vector<StarPiece> pieces);

FragmentTiling pieces_to_tiling(const Board& b, const std::vector<StarPiece>& pieces);

}  // namespace detail

}  // namespace satdom
