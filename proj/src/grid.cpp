#include "satdom/grid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "satdom/error.hpp"

namespace satdom {

std::string to_string(GridKind k) {
  switch (k) {
    case GridKind::square: return "square";
    case GridKind::triangular: return "triangular";
    case GridKind::hexagonal: return "hexagonal";
  }
  return "?";
}

std::optional<GridKind> grid_kind_from_string(std::string_view s) {
  if (s == "square") return GridKind::square;
  if (s == "triangular") return GridKind::triangular;
  if (s == "hexagonal") return GridKind::hexagonal;
  return std::nullopt;
}

std::string to_string(Cell c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

int neighbor_count(GridKind k) {
  switch (k) {
    case GridKind::square: return 4;
    case GridKind::triangular: return 3;
    case GridKind::hexagonal: return 6;
  }
  return 0;
}

std::vector<Cell> neighbors(GridKind k, Cell c) {
  std::vector<Cell> out;
  switch (k) {
    case GridKind::square:
      out = {{c.a - 1, c.b}, {c.a, c.b - 1}, {c.a, c.b + 1}, {c.a + 1, c.b}};
      break;
    case GridKind::triangular:
      // Upward cell (even position): left, right, below. Downward cell:
      // above, left, right. Rows shift by one position per step down.
      if (((c.b % 2) + 2) % 2 == 0) {
        out = {{c.a, c.b - 1}, {c.a, c.b + 1}, {c.a + 1, c.b + 1}};
      } else {
        out = {{c.a - 1, c.b - 1}, {c.a, c.b - 1}, {c.a, c.b + 1}};
      }
      break;
    case GridKind::hexagonal:
      out = {{c.a - 1, c.b},     {c.a - 1, c.b + 1}, {c.a, c.b - 1},
             {c.a, c.b + 1},     {c.a + 1, c.b - 1}, {c.a + 1, c.b}};
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Board::Board(GridKind kind, std::vector<Cell> cells) : kind_(kind), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  if (cells_.empty()) throw DomainError("board must be nonempty");
  has_isolated_ = false;
  for (const Cell& c : cells_) {
    bool any = false;
    for (const Cell& n : neighbors(kind_, c)) {
      if (contains(n)) {
        any = true;
        break;
      }
    }
    if (!any) {
      has_isolated_ = true;
      break;
    }
  }
}

bool Board::contains(Cell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::optional<int> Board::index_of(Cell c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) return std::nullopt;
  return static_cast<int>(it - cells_.begin());
}

std::vector<Cell> Board::board_neighbors(Cell c) const {
  std::vector<Cell> out;
  for (const Cell& n : neighbors(kind_, c))
    if (contains(n)) out.push_back(n);
  return out;
}

Board make_rectangle(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("rectangle sides must be positive");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) cells.push_back({i, j});
  return Board(GridKind::square, std::move(cells));
}

Board make_triangle(int n) {
  if (n < 1) throw DomainError("triangle side must be positive");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int p = 0; p <= 2 * r; ++p) cells.push_back({r, p});
  return Board(GridKind::triangular, std::move(cells));
}

namespace {

Board parse_ascii(const std::string& text) {
  std::vector<Cell> cells;
  int row = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t eol = text.find('\n', line_start);
    std::size_t end = (eol == std::string::npos) ? text.size() : eol;
    // trailing whitespace is ignored
    std::size_t last = end;
    while (last > line_start && (text[last - 1] == ' ' || text[last - 1] == '\t' || text[last - 1] == '\r'))
      --last;
    for (std::size_t i = line_start; i < last; ++i) {
      char ch = text[i];
      if (ch == '#') {
        cells.push_back({row, static_cast<std::int32_t>(i - line_start)});
      } else if (ch != '.') {
        throw ParseError("line " + std::to_string(row + 1) + " column " +
                         std::to_string(i - line_start + 1) + ": unexpected character '" +
                         std::string(1, ch) + "' (expected '#' or '.')");
      }
    }
    if (eol == std::string::npos) break;
    line_start = eol + 1;
    ++row;
  }
  if (cells.empty()) throw ParseError("ascii board has no '#' cells");
  return Board(GridKind::square, std::move(cells));
}

Board parse_cell_list(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("cell-list: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("cells"))
    throw ParseError("cell-list: expected object with \"kind\" and \"cells\"");
  if (!doc["kind"].is_string())
    throw ParseError("cell-list: \"kind\" must be a string");
  auto kind = grid_kind_from_string(doc["kind"].get<std::string>());
  if (!kind)
    throw ParseError("cell-list: unknown grid kind \"" + doc["kind"].get<std::string>() + "\"");
  if (!doc["cells"].is_array()) throw ParseError("cell-list: \"cells\" must be an array");
  std::vector<Cell> cells;
  for (const auto& item : doc["cells"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError("cell-list: each cell must be a pair of integers");
    long long a = item[0].get<long long>(), b = item[1].get<long long>();
    if (a < INT32_MIN || a > INT32_MAX || b < INT32_MIN || b > INT32_MAX)
      throw ParseError("cell-list: coordinate out of 32-bit range");
    cells.push_back({static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)});
  }
  if (cells.empty()) throw ParseError("cell-list: board has no cells");
  return Board(*kind, std::move(cells));
}

}  // namespace

Board parse_board(const std::string& text, BoardFormat format) {
  switch (format) {
    case BoardFormat::ascii: return parse_ascii(text);
    case BoardFormat::cell_list: return parse_cell_list(text);
  }
  throw ParseError("unknown board format");
}

std::string board_to_ascii(const Board& b) {
  if (b.kind() != GridKind::square)
    throw DomainError("ascii board format is square-grid only");
  std::int32_t rmin = b.cells().front().a, rmax = rmin;
  std::int32_t cmin = b.cells().front().b, cmax = cmin;
  for (const Cell& c : b.cells()) {
    rmin = std::min(rmin, c.a);
    rmax = std::max(rmax, c.a);
    cmin = std::min(cmin, c.b);
    cmax = std::max(cmax, c.b);
  }
  std::string out;
  for (std::int32_t r = rmin; r <= rmax; ++r) {
    std::string line(static_cast<std::size_t>(cmax - cmin + 1), '.');
    for (std::int32_t c = cmin; c <= cmax; ++c)
      if (b.contains({r, c})) line[static_cast<std::size_t>(c - cmin)] = '#';
    // rows are emitted relative to the bounding box
    out += line;
    out += '\n';
  }
  return out;
}

std::string board_to_cell_list(const Board& b) {
  nlohmann::json doc;
  doc["kind"] = to_string(b.kind());
  auto cells = nlohmann::json::array();
  for (const Cell& c : b.cells()) cells.push_back({c.a, c.b});
  doc["cells"] = std::move(cells);
  return doc.dump();
}

RegularityResult is_regular(const Board& b) {
  // Map ambient cell -> board cells adjacent to it. Any two board cells
  // listed under the same ambient cell share that ambient neighbor.
  std::map<Cell, std::vector<Cell>> around;
  for (const Cell& c : b.cells())
    for (const Cell& n : neighbors(b.kind(), c)) around[n].push_back(c);

  std::set<std::pair<Cell, Cell>> candidates;
  for (const auto& [w, adj] : around) {
    if (adj.size() < 2) continue;
    if (b.contains(w)) continue;  // the shared neighbor is on the board
    for (std::size_t i = 0; i < adj.size(); ++i)
      for (std::size_t j = i + 1; j < adj.size(); ++j)
        candidates.insert({adj[i], adj[j]});
  }

  RegularityResult res;
  for (const auto& [u, v] : candidates) {
    // Does some other common ambient neighbor lie on the board?
    bool ok = false;
    for (const Cell& w : neighbors(b.kind(), u)) {
      if (!b.contains(w)) continue;
      for (const Cell& x : neighbors(b.kind(), v)) {
        if (x == w) {
          ok = true;
          break;
        }
      }
      if (ok) break;
    }
    if (!ok) {
      res.regular = false;
      res.witness = {u, v};
      return res;  // candidates iterate in lexicographic pair order
    }
  }
  return res;
}

std::vector<Cell> isolated_cells(const Board& b) {
  std::vector<Cell> out;
  for (const Cell& c : b.cells())
    if (b.board_neighbors(c).empty()) out.push_back(c);
  return out;
}

}  // namespace satdom
