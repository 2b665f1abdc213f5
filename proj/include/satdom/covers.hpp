#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satdom/grid.hpp"
#include "satdom/report.hpp"
#include "satdom/tilings.hpp"

namespace satdom {

// A covering by maximal fragments: the closed neighborhoods of the centers
// cover the board. Centers live in the ambient grid and may lie off-board;
// tiles may overlap and poke outside.
struct MaxFragmentCover {
  Board board;
  std::vector<Cell> centers;  // sorted, unique
};

MaxFragmentCover make_max_fragment_cover(Board board, std::vector<Cell> centers);
std::optional<std::string> check_cover(const MaxFragmentCover& c);
void validate_cover(const MaxFragmentCover& c);

// x(B): minimum number of maximal-fragment centers covering b. Exact set
// cover over all ambient candidate centers whose closed neighborhood meets
// the board, with dominance reduction on the candidates.
SolveReport<MaxFragmentCover> x_exact(const Board& b,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

// Turn a cover of a regular board into a fragment tiling with at most
// |c.centers| fragments: trim tiles to the board, rejoin split tiles through
// a common board neighbor, resolve overlaps toward the lexicographically
// lesser center and absorb leftover single cells.
FragmentTiling trim_to_tiling(const Board& b, const MaxFragmentCover& c);

// ((n+2)^2 - k(n)) / 5 with k(n) = 4,4,6,5,16 as n mod 5 = 0,1,2,3,4: the
// best of the five ways to lay an n x n window over the X-pentomino
// tessellation of the plane.
long long tessellation_upper_bound(long long n);

// A cover of make_triangle(n) by exactly ceil(n^2/4) maximal fragments.
// Even n tile exactly; n = 4m+1 uses three side-2m corner triangles plus an
// inverted side-(2m+2) center whose three corner tiles poke out; n = 4m+3
// uses three side-(2m+2) corner triangles (overlapping at 3 cells) plus an
// inverted side-2m center.
MaxFragmentCover triangular_cover(int n);

// ceil(n^2 / 4)
long long x_triangular_value(long long n);

}  // namespace satdom
