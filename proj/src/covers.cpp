#include "satdom/covers.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "satdom/detail/setcover.hpp"
#include "satdom/error.hpp"

namespace satdom {

namespace {

std::vector<Cell> closed_neighborhood(GridKind k, Cell c) {
  std::vector<Cell> out = neighbors(k, c);
  out.insert(std::upper_bound(out.begin(), out.end(), c), c);
  return out;
}

}  // namespace

MaxFragmentCover make_max_fragment_cover(Board board, std::vector<Cell> centers) {
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  MaxFragmentCover c{std::move(board), std::move(centers)};
  validate_cover(c);
  return c;
}

std::optional<std::string> check_cover(const MaxFragmentCover& c) {
  if (c.centers.empty()) return "cover has no centers";
  std::set<Cell> covered;
  for (const Cell& ctr : c.centers) {
    bool touches = false;
    for (const Cell& x : closed_neighborhood(c.board.kind(), ctr))
      if (c.board.contains(x)) {
        covered.insert(x);
        touches = true;
      }
    if (!touches) return "center " + to_string(ctr) + " does not touch the board";
  }
  for (const Cell& x : c.board.cells())
    if (!covered.count(x)) return "cell " + to_string(x) + " not covered";
  return std::nullopt;
}

void validate_cover(const MaxFragmentCover& c) {
  if (auto problem = check_cover(c)) throw ValidationError("invalid cover: " + *problem);
}

SolveReport<MaxFragmentCover> x_exact(const Board& b, std::uint64_t node_budget) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = b.size();
  const int words = (n + 63) / 64;

  // candidate centers: ambient cells whose closed neighborhood meets b
  std::map<Cell, detail::Mask> coverage;
  for (int i = 0; i < n; ++i) {
    const Cell c = b.cells()[i];
    for (const Cell& ctr : closed_neighborhood(b.kind(), c)) {
      auto [it, fresh] = coverage.try_emplace(ctr, detail::Mask(words, 0));
      it->second[i / 64] |= 1ull << (i % 64);
    }
  }

  // dominance reduction: drop candidates whose on-board coverage is a subset
  // of another's (ties keep the lexicographically least center)
  std::vector<Cell> cand_cells;
  std::vector<detail::Mask> cand_masks;
  for (auto& [cell, mask] : coverage) {
    cand_cells.push_back(cell);
    cand_masks.push_back(mask);
  }
  std::vector<char> dominated(cand_cells.size(), 0);
  for (std::size_t i = 0; i < cand_cells.size(); ++i) {
    if (dominated[i]) continue;
    for (std::size_t j = 0; j < cand_cells.size(); ++j) {
      if (i == j || dominated[j]) continue;
      if (detail::count_and_not(cand_masks[i], cand_masks[j]) == 0) {
        // equal coverage keeps the earlier (lesser) center
        if (detail::count_and_not(cand_masks[j], cand_masks[i]) == 0 && j > i) continue;
        dominated[i] = 1;
        break;
      }
    }
  }
  std::vector<Cell> kept_cells;
  std::vector<detail::Mask> kept_masks;
  for (std::size_t i = 0; i < cand_cells.size(); ++i)
    if (!dominated[i]) {
      kept_cells.push_back(cand_cells[i]);
      kept_masks.push_back(std::move(cand_masks[i]));
    }

  detail::SetCoverOutcome out = detail::min_set_cover(n, kept_masks, node_budget);

  SolveReport<MaxFragmentCover> rep;
  rep.nodes_explored = out.nodes;
  std::vector<Cell> centers;
  for (int s : out.chosen) centers.push_back(kept_cells[s]);
  rep.witness = make_max_fragment_cover(b, std::move(centers));
  if (out.solved) {
    rep.status = SolveStatus::solved;
    rep.value = out.best;
    rep.lower_bound = rep.upper_bound = out.best;
  } else {
    rep.status = SolveStatus::budget_exhausted;
    rep.lower_bound = out.root_lower_bound;
    rep.upper_bound = out.best;
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

// Split the on-board part of one tile into connected clusters.
std::vector<std::vector<Cell>> trim_clusters(const Board& b, const std::vector<Cell>& part) {
  std::vector<std::vector<Cell>> clusters;
  std::set<Cell> left(part.begin(), part.end());
  while (!left.empty()) {
    std::vector<Cell> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const Cell& nb : neighbors(b.kind(), comp[i])) {
        auto it = left.find(nb);
        if (it != left.end()) {
          comp.push_back(nb);
          left.erase(it);
        }
      }
    std::sort(comp.begin(), comp.end());
    clusters.push_back(std::move(comp));
  }
  std::sort(clusters.begin(), clusters.end());
  return clusters;
}

// Center of a connected star-shaped cluster: a cell adjacent to all others.
Cell cluster_center(GridKind k, const std::vector<Cell>& cluster) {
  for (const Cell& c : cluster) {
    const auto nbrs = neighbors(k, c);
    bool all = true;
    for (const Cell& other : cluster)
      if (other != c && !std::binary_search(nbrs.begin(), nbrs.end(), other)) {
        all = false;
        break;
      }
    if (all) return c;
  }
  throw Error("internal: trimmed tile fragment is not a star");
}

Cell least_common_board_neighbor(const Board& b, Cell u, Cell v) {
  const auto nv = neighbors(b.kind(), v);
  for (const Cell& w : neighbors(b.kind(), u))
    if (b.contains(w) && std::binary_search(nv.begin(), nv.end(), w)) return w;
  throw Error("internal: regular board must provide a common neighbor for " + to_string(u) +
              " and " + to_string(v));
}

}  // namespace

FragmentTiling trim_to_tiling(const Board& b, const MaxFragmentCover& c) {
  if (!(c.board == b)) throw ValidationError("cover belongs to a different board");
  validate_cover(c);
  const RegularityResult reg = is_regular(b);
  if (!reg.regular)
    throw DomainError("board is irregular: cells " + to_string(reg.witness->first) + " and " +
                      to_string(reg.witness->second) +
                      " share an ambient neighbor but none on the board");
  const auto isolated = isolated_cells(b);
  if (!isolated.empty())
    throw DomainError("board has isolated cell " + to_string(isolated.front()) +
                      "; it cannot be tiled by fragments");

  // trim every tile to the board and repair tiles split in two
  std::vector<detail::StarPiece> pieces;
  for (const Cell& ctr : c.centers) {
    std::vector<Cell> part;
    for (const Cell& x : closed_neighborhood(b.kind(), ctr))
      if (b.contains(x)) part.push_back(x);
    if (b.contains(ctr)) {
      pieces.push_back({ctr, part});
      continue;
    }
    auto clusters = trim_clusters(b, part);
    if (clusters.size() == 1) {
      const auto& cl = clusters[0];
      pieces.push_back({cl.size() == 1 ? cl[0] : cluster_center(b.kind(), cl), cl});
    } else if (clusters.size() == 2 && clusters[0].size() == 1 && clusters[1].size() == 1) {
      // regularity guarantees the two separated spokes a common neighbor
      const Cell u = clusters[0][0], v = clusters[1][0];
      const Cell w = least_common_board_neighbor(b, u, v);
      std::vector<Cell> cells{u, v, w};
      std::sort(cells.begin(), cells.end());
      pieces.push_back({w, cells});
    } else {
      throw Error("internal: a trimmed tile on a regular board splits into at most two cells");
    }
  }

  // merge pieces that ended up with the same center
  std::sort(pieces.begin(), pieces.end(),
            [](const detail::StarPiece& x, const detail::StarPiece& y) {
              return x.center < y.center;
            });
  std::vector<detail::StarPiece> merged;
  for (auto& p : pieces) {
    if (!merged.empty() && merged.back().center == p.center) {
      auto& cells = merged.back().cells;
      cells.insert(cells.end(), p.cells.begin(), p.cells.end());
      std::sort(cells.begin(), cells.end());
      cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    } else {
      merged.push_back(std::move(p));
    }
  }

  // assign each multiply-claimed cell to one piece
  std::map<Cell, std::vector<int>> claims;
  for (std::size_t i = 0; i < merged.size(); ++i)
    for (const Cell& x : merged[i].cells) claims[x].push_back(static_cast<int>(i));
  for (const auto& [x, owners] : claims) {
    if (owners.size() < 2) continue;
    int winner = -1;
    for (int i : owners)
      if (merged[i].center == x) winner = i;
    if (winner < 0) {
      // prefer the least center, but do not strip a two-cell piece for a
      // piece that can spare the cell
      winner = owners.front();
      if (merged[winner].cells.size() >= 3)
        for (int i : owners)
          if (merged[i].cells.size() == 2) {
            winner = i;
            break;
          }
    }
    for (int i : owners) {
      if (i == winner) continue;
      auto& cl = merged[i].cells;
      cl.erase(std::find(cl.begin(), cl.end(), x));
    }
  }

  auto final_pieces = detail::absorb_singletons(b, std::move(merged));
  FragmentTiling t = detail::pieces_to_tiling(b, final_pieces);
  if (t.fragments.size() > c.centers.size())
    throw Error("internal: trimming increased the tile count");
  return t;
}

long long tessellation_upper_bound(long long n) {
  if (n < 1) throw DomainError("board side must be positive");
  static const int k_table[5] = {4, 4, 6, 5, 16};
  const long long k = k_table[n % 5];
  const long long num = (n + 2) * (n + 2) - k;
  if (num % 5 != 0) throw Error("internal: tessellation bound must be an integer");
  return num / 5;
}

namespace {

// Tile centers for an upward triangle of even side s with apex at the
// origin: the board scales down to a half-size triangle of side-2 blocks,
// one maximal fragment each.
std::vector<Cell> even_triangle_centers(int s) {
  std::vector<Cell> out;
  const int half = s / 2;
  for (int r = 0; r < half; ++r)
    for (int p = 0; p <= 2 * r; ++p) {
      if (p % 2 == 0)
        out.push_back({2 * r + 1, 2 * p + 1});  // upward block, downward center
      else
        out.push_back({2 * r, 2 * p});  // downward block, upward center
    }
  return out;
}

}  // namespace

MaxFragmentCover triangular_cover(int n) {
  if (n < 1) throw DomainError("triangle side must be positive");
  const Board board = make_triangle(n);
  std::vector<Cell> centers;

  if (n % 2 == 0) {
    centers = even_triangle_centers(n);
  } else {
    // three corner triangles and an inverted center, both of even side;
    // for n = 4m+1 the inverted center pokes out at its three corner cells
    const int m = n / 4;
    const int corner_side = (n % 4 == 1) ? 2 * m : 2 * m + 2;
    const int center_side = (n % 4 == 1) ? 2 * m + 2 : 2 * m;
    const Cell apexes[3] = {{0, 0}, {2 * m + 1, 0}, {2 * m + 1, 4 * m + 2}};
    for (const Cell& apex : apexes)
      for (const Cell& ctr : even_triangle_centers(corner_side))
        centers.push_back({apex.a + ctr.a, apex.b + ctr.b});
    // rotate the upward model triangle onto the inverted central piece
    for (const Cell& ctr : even_triangle_centers(center_side))
      centers.push_back({4 * m + 1 - ctr.a, 4 * m + 1 - ctr.b});
  }
  return make_max_fragment_cover(board, std::move(centers));
}

long long x_triangular_value(long long n) {
  if (n < 1) throw DomainError("triangle side must be positive");
  return (n * n + 3) / 4;
}

}  // namespace satdom
