#include "satdom/tilings.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "satdom/domgraph.hpp"
#include "satdom/error.hpp"

namespace satdom {

std::vector<Cell> Fragment::cells() const {
  std::vector<Cell> out = spokes;
  out.push_back(center);
  std::sort(out.begin(), out.end());
  return out;
}

Fragment make_fragment(GridKind kind, Cell center, std::vector<Cell> spokes) {
  std::sort(spokes.begin(), spokes.end());
  if (spokes.empty()) throw ValidationError("fragment needs at least one spoke");
  if (std::adjacent_find(spokes.begin(), spokes.end()) != spokes.end())
    throw ValidationError("fragment has duplicate spokes");
  if (static_cast<int>(spokes.size()) > neighbor_count(kind))
    throw ValidationError("fragment exceeds the spoke bound for this grid");
  const auto nbrs = neighbors(kind, center);
  for (const Cell& s : spokes) {
    if (s == center) throw ValidationError("fragment spoke equals its center");
    if (!std::binary_search(nbrs.begin(), nbrs.end(), s))
      throw ValidationError("fragment spoke " + to_string(s) + " not adjacent to center " +
                            to_string(center));
  }
  // canonical center of a domino fragment is the lesser cell
  if (spokes.size() == 1 && spokes[0] < center) std::swap(center, spokes[0]);
  return Fragment{center, std::move(spokes)};
}

std::optional<std::string> check_tiling(const FragmentTiling& t) {
  std::map<Cell, int> covered;
  for (const Fragment& f : t.fragments) {
    try {
      make_fragment(t.board.kind(), f.center, f.spokes);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    for (const Cell& c : f.cells()) {
      if (!t.board.contains(c)) return "fragment cell " + to_string(c) + " off board";
      ++covered[c];
    }
  }
  for (const auto& [c, k] : covered)
    if (k > 1) return "cell " + to_string(c) + " covered by " + std::to_string(k) + " fragments";
  for (const Cell& c : t.board.cells())
    if (!covered.count(c)) return "cell " + to_string(c) + " not covered by any fragment";
  return std::nullopt;
}

void validate_tiling(const FragmentTiling& t) {
  if (auto problem = check_tiling(t)) throw ValidationError("invalid tiling: " + *problem);
}

Domino make_domino(GridKind kind, Cell x, Cell y) {
  if (y < x) std::swap(x, y);
  if (x == y) throw ValidationError("domino cells must be distinct");
  const auto nbrs = neighbors(kind, x);
  if (!std::binary_search(nbrs.begin(), nbrs.end(), y))
    throw ValidationError("domino cells " + to_string(x) + "," + to_string(y) +
                          " are not adjacent");
  return Domino{x, y};
}

std::string to_string(const Domino& d) {
  return "[" + to_string(d.a) + "," + to_string(d.b) + "]";
}

DominoCovering make_domino_covering(Board board, std::vector<Domino> dominoes) {
  std::sort(dominoes.begin(), dominoes.end());
  DominoCovering c{std::move(board), std::move(dominoes)};
  validate_covering(c);
  return c;
}

std::optional<std::string> check_covering(const DominoCovering& c) {
  std::vector<Domino> ds = c.dominoes;
  std::sort(ds.begin(), ds.end());
  for (std::size_t i = 1; i < ds.size(); ++i)
    if (ds[i] == ds[i - 1]) return "duplicate domino " + to_string(ds[i]);
  std::set<Cell> covered;
  for (const Domino& d : ds) {
    try {
      make_domino(c.board.kind(), d.a, d.b);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    for (Cell x : {d.a, d.b}) {
      if (!c.board.contains(x)) return "domino cell " + to_string(x) + " off board";
      covered.insert(x);
    }
  }
  for (const Cell& x : c.board.cells())
    if (!covered.count(x)) return "cell " + to_string(x) + " not covered";
  return std::nullopt;
}

void validate_covering(const DominoCovering& c) {
  if (auto problem = check_covering(c)) throw ValidationError("invalid covering: " + *problem);
}

SaturationResult is_saturated(const DominoCovering& c) {
  if (auto problem = check_covering(c)) throw ValidationError("not a covering: " + *problem);
  std::map<Cell, int> count;
  for (const Domino& d : c.dominoes) {
    ++count[d.a];
    ++count[d.b];
  }
  std::vector<Domino> ds = c.dominoes;
  std::sort(ds.begin(), ds.end());
  for (const Domino& d : ds)
    if (count[d.a] > 1 && count[d.b] > 1) return {false, d};
  return {true, std::nullopt};
}

SolveReport<FragmentTiling> minimal_fragment_tiling(const Board& b, std::uint64_t node_budget) {
  const auto isolated = isolated_cells(b);
  if (!isolated.empty())
    throw DomainError("board has isolated cell " + to_string(isolated.front()) +
                      "; fragment tilings need every cell connected to another");
  AdjacencyGraph g = adjacency_graph(b);
  SolveReport<DominatingSet> gr = gamma_exact(g, node_budget);
  SolveReport<FragmentTiling> out;
  out.status = gr.status;
  out.lower_bound = gr.lower_bound;
  out.upper_bound = gr.upper_bound;
  out.nodes_explored = gr.nodes_explored;
  out.elapsed_seconds = gr.elapsed_seconds;
  if (!gr.solved()) return out;
  FragmentTiling t = star_partition(g, *gr.witness);
  assert(static_cast<int>(t.fragments.size()) == gr.value);
  out.value = static_cast<int>(t.fragments.size());
  out.witness = std::move(t);
  return out;
}

int d_value(const Board& b, std::uint64_t node_budget) {
  SolveReport<FragmentTiling> r = minimal_fragment_tiling(b, node_budget);
  if (!r.solved())
    throw CapacityError("search budget exhausted: f between " + std::to_string(r.lower_bound) +
                        " and " + std::to_string(r.upper_bound));
  return b.size() - r.value;
}

DominoCovering tiling_to_saturated(const FragmentTiling& t) {
  validate_tiling(t);
  std::vector<Domino> ds;
  for (const Fragment& f : t.fragments)
    for (const Cell& s : f.spokes) ds.push_back(make_domino(t.board.kind(), f.center, s));
  return make_domino_covering(t.board, std::move(ds));
}

FragmentTiling saturated_to_tiling(const DominoCovering& c) {
  SaturationResult sat = is_saturated(c);  // also validates the covering
  if (!sat.saturated)
    throw ValidationError("covering is not saturated: domino " + to_string(*sat.redundant) +
                          " is redundant");
  std::map<Cell, std::vector<Cell>> link;
  for (const Domino& d : c.dominoes) {
    link[d.a].push_back(d.b);
    link[d.b].push_back(d.a);
  }
  FragmentTiling t{c.board, {}};
  std::set<Cell> seen;
  for (const Cell& start : c.board.cells()) {
    if (seen.count(start)) continue;
    // component walk
    std::vector<Cell> comp{start};
    seen.insert(start);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const Cell& n : link[comp[i]])
        if (seen.insert(n).second) comp.push_back(n);
    // components of a saturated covering are stars
    Cell center = comp[0];
    std::size_t best_deg = 0;
    std::sort(comp.begin(), comp.end());
    for (const Cell& x : comp)
      if (link[x].size() > best_deg) {
        best_deg = link[x].size();
        center = x;
      }
    if (comp.size() == 2) center = comp[0];  // canonical lesser on a domino
    std::vector<Cell> spokes;
    for (const Cell& x : comp)
      if (x != center) spokes.push_back(x);
    t.fragments.push_back(make_fragment(c.board.kind(), center, std::move(spokes)));
  }
  std::sort(t.fragments.begin(), t.fragments.end(),
            [](const Fragment& x, const Fragment& y) { return x.cells() < y.cells(); });
  validate_tiling(t);
  return t;
}

bool brute_check_radoicic(int n, int k) {
  if (n < 1 || n > 4) throw CapacityError("brute_check_radoicic is guarded to n <= 4");
  if (k < 1) throw DomainError("k must be positive");
  const int cells = n * n;
  auto idx = [n](int r, int c) { return r * n + c; };
  std::vector<std::pair<int, int>> dominoes;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) dominoes.emplace_back(idx(r, c), idx(r, c + 1));
      if (r + 1 < n) dominoes.emplace_back(idx(r, c), idx(r + 1, c));
    }
  const int m = static_cast<int>(dominoes.size());
  if (k > m) return true;  // no covering by k distinct dominoes exists
  const std::uint32_t full = (cells >= 32) ? 0xFFFFFFFFu : ((1u << cells) - 1);
  std::vector<std::uint32_t> mask(m);
  for (int i = 0; i < m; ++i)
    mask[i] = (1u << dominoes[i].first) | (1u << dominoes[i].second);

  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  std::vector<int> count(cells);
  while (true) {
    std::uint32_t cover = 0;
    for (int i : pick) cover |= mask[i];
    if (cover == full) {
      std::fill(count.begin(), count.end(), 0);
      for (int i : pick) {
        ++count[dominoes[i].first];
        ++count[dominoes[i].second];
      }
      bool saturated = true;
      for (int i : pick)
        if (count[dominoes[i].first] > 1 && count[dominoes[i].second] > 1) {
          saturated = false;
          break;
        }
      if (saturated) return false;  // a saturated k-covering exists
    }
    // next combination
    int j = k - 1;
    while (j >= 0 && pick[j] == m - k + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  return true;
}

namespace detail {

std::vector<StarPiece> absorb_singletons(const Board& b, std::vector<StarPiece> pieces) {
  std::map<Cell, int> owner;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (const Cell& c : pieces[i].cells) owner[c] = static_cast<int>(i);

  std::vector<int> singletons;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].cells.size() == 1) singletons.push_back(static_cast<int>(i));
  std::sort(singletons.begin(), singletons.end(), [&](int x, int y) {
    return pieces[x].center < pieces[y].center;
  });

  std::vector<bool> dead(pieces.size(), false);
  auto add_cell = [](StarPiece& p, Cell c) {
    p.cells.insert(std::upper_bound(p.cells.begin(), p.cells.end(), c), c);
  };
  auto drop_cell = [](StarPiece& p, Cell c) {
    p.cells.erase(std::find(p.cells.begin(), p.cells.end(), c));
  };

  for (int si : singletons) {
    if (dead[si] || pieces[si].cells.size() != 1) continue;  // absorbed meanwhile
    const Cell s = pieces[si].center;
    int fi = -1;
    Cell u{};
    for (const Cell& n : b.board_neighbors(s)) {
      auto it = owner.find(n);
      if (it != owner.end() && it->second != si) {
        fi = it->second;
        u = n;
        break;
      }
    }
    if (fi < 0) throw ValidationError("cell " + to_string(s) + " cannot join any fragment");
    StarPiece& f = pieces[fi];
    if (f.cells.size() == 1) {
      // two adjacent singletons become a domino
      f.center = std::min(s, u);
      add_cell(f, s);
    } else if (u == f.center) {
      add_cell(f, s);  // extra spoke
    } else if (f.cells.size() == 2) {
      // either cell of a domino can serve as center
      f.center = u;
      add_cell(f, s);
    } else {
      // split the spoke off to pair with the singleton
      drop_cell(f, u);
      pieces[si].center = std::min(s, u);
      pieces[si].cells = {std::min(s, u), std::max(s, u)};
      owner[s] = si;
      owner[u] = si;
      continue;
    }
    owner[s] = fi;
    dead[si] = true;
  }

  std::vector<StarPiece> out;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (!dead[i]) out.push_back(std::move(pieces[i]));
  return out;
}

FragmentTiling pieces_to_tiling(const Board& b, const std::vector<StarPiece>& pieces) {
  FragmentTiling t{b, {}};
  for (const StarPiece& p : pieces) {
    std::vector<Cell> spokes;
    for (const Cell& c : p.cells)
      if (c != p.center) spokes.push_back(c);
    t.fragments.push_back(make_fragment(b.kind(), p.center, std::move(spokes)));
  }
  std::sort(t.fragments.begin(), t.fragments.end(),
            [](const Fragment& x, const Fragment& y) { return x.cells() < y.cells(); });
  validate_tiling(t);
  return t;
}

}  // namespace detail

}  // namespace satdom
