#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace satdom {

enum class GridKind { square, triangular, hexagonal };

std::string to_string(GridKind k);
std::optional<GridKind> grid_kind_from_string(std::string_view s);

// A grid cell. The pair means (row, col) on the square grid, (row, pos) on
// the triangular grid and axial (q, r) on the hexagonal grid.
//
// Triangular layout: row r of a triangle board holds positions 0..2r; a cell
// points up iff its position is even. The ambient grid extends the rows to
// all integer positions.
struct Cell {
  std::int32_t a = 0;
  std::int32_t b = 0;
  auto operator<=>(const Cell&) const = default;
};

std::string to_string(Cell c);

// Number of edge-neighbors per cell: 4 (square), 3 (triangular),
// 6 (hexagonal). Also the per-grid spoke bound for fragments.
int neighbor_count(GridKind k);

// Ambient-grid neighbors of c, in canonical (lexicographic) order.
std::vector<Cell> neighbors(GridKind k, Cell c);

// A finite, nonempty set of cells on one grid. Cells are kept sorted and
// unique; whether any cell is isolated (no neighbor on the board) is cached
// at construction.
class Board {
 public:
  Board(GridKind kind, std::vector<Cell> cells);

  GridKind kind() const { return kind_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool contains(Cell c) const;
  // Index of c in the canonical cell order, or nullopt.
  std::optional<int> index_of(Cell c) const;
  bool has_isolated_cells() const { return has_isolated_; }
  // Neighbors of c that lie on the board, canonical order.
  std::vector<Cell> board_neighbors(Cell c) const;

  friend bool operator==(const Board& x, const Board& y) {
    return x.kind_ == y.kind_ && x.cells_ == y.cells_;
  }

 private:
  GridKind kind_;
  std::vector<Cell> cells_;
  bool has_isolated_ = false;
};

// m x n rectangle on the square grid, cells {(i,j) : 0<=i<m, 0<=j<n}.
Board make_rectangle(int m, int n);

// Triangle board of side n on the triangular grid: rows of 1, 3, ..., 2n-1
// cells, n*n cells total.
Board make_triangle(int n);

enum class BoardFormat { ascii, cell_list };

// ascii: lines of '#' (cell) and '.' (hole), square grid only.
// cell_list: JSON document {"kind": ..., "cells": [[a,b], ...]}.
Board parse_board(const std::string& text, BoardFormat format);

std::string board_to_ascii(const Board& b);  // square boards only
std::string board_to_cell_list(const Board& b);

struct RegularityResult {
  bool regular = true;
  // Lexicographically least pair of board cells that share an ambient
  // neighbor but no board neighbor; set iff !regular.
  std::optional<std::pair<Cell, Cell>> witness;
};

// A board is regular unless some pair of its cells has a common neighbor in
// the ambient grid but none on the board. The same predicate covers all
// three grids.
RegularityResult is_regular(const Board& b);

// Cells with no neighbor on the board.
std::vector<Cell> isolated_cells(const Board& b);

}  // namespace satdom
