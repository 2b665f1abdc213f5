#include "satdom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "satdom/error.hpp"

namespace satdom::oracle {

namespace {

// All-subsets-of-size-k walker over indices 0..m-1.
struct Combinations {
  int m, k;
  std::vector<int> pick;
  bool first = true;

  Combinations(int m_, int k_) : m(m_), k(k_), pick(k_) {
    for (int i = 0; i < k; ++i) pick[i] = i;
  }
  bool next() {
    if (first) {
      first = false;
      return k <= m;
    }
    int j = k - 1;
    while (j >= 0 && pick[j] == m - k + j) --j;
    if (j < 0) return false;
    ++pick[j];
    for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
    return true;
  }
};

}  // namespace

int brute_gamma(const AdjacencyGraph& g) {
  const int n = g.size();
  if (n == 0) throw DomainError("brute_gamma needs a nonempty graph");
  if (n > 20) throw CapacityError("brute_gamma is guarded to 20 vertices, got " + std::to_string(n));
  std::vector<std::uint32_t> closed(n);
  for (int v = 0; v < n; ++v) {
    closed[v] = 1u << v;
    for (int u : g.adj[v]) closed[v] |= 1u << u;
  }
  const std::uint32_t full = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1);
  for (int k = 1; k <= n; ++k) {
    Combinations combos(n, k);
    while (combos.next()) {
      std::uint32_t dom = 0;
      for (int v : combos.pick) dom |= closed[v];
      if (dom == full) return k;
    }
  }
  return n;  // unreachable: the whole vertex set dominates
}

int brute_min_tiling(const Board& b) {
  const int n = b.size();
  if (n > 16) throw CapacityError("brute_min_tiling is guarded to 16 cells, got " + std::to_string(n));
  if (b.has_isolated_cells())
    throw DomainError("brute_min_tiling: board has an isolated cell");
  const auto& cells = b.cells();
  const std::uint32_t full = (1u << n) - 1;

  // every fragment of the board, as a cell mask with a marked center
  std::set<std::uint32_t> fragment_sets;
  for (int i = 0; i < n; ++i) {
    std::vector<int> nbr;
    for (const Cell& c : neighbors(b.kind(), cells[i])) {
      auto it = std::lower_bound(cells.begin(), cells.end(), c);
      if (it != cells.end() && *it == c) nbr.push_back(static_cast<int>(it - cells.begin()));
    }
    const int deg = static_cast<int>(nbr.size());
    for (int sub = 1; sub < (1 << deg); ++sub) {
      std::uint32_t mask = 1u << i;
      for (int t = 0; t < deg; ++t)
        if (sub & (1 << t)) mask |= 1u << nbr[t];
      fragment_sets.insert(mask);
    }
  }
  std::vector<std::vector<std::uint32_t>> by_cell(n);
  for (std::uint32_t f : fragment_sets)
    by_cell[std::countr_zero(f)].push_back(f);

  const int max_frag = neighbor_count(b.kind()) + 1;
  int best = n + 1;
  auto dfs = [&](auto&& self, std::uint32_t free, int count) -> void {
    if (free == 0) {
      best = std::min(best, count);
      return;
    }
    const int remaining = std::popcount(free);
    if (count + (remaining + max_frag - 1) / max_frag >= best) return;
    const int c = std::countr_zero(free);
    for (std::uint32_t f : by_cell[c])
      if ((f & ~free) == 0) self(self, free & ~f, count + 1);
  };
  dfs(dfs, full, 0);
  if (best > n) throw Error("internal: board without isolated cells must be tileable");
  return best;
}

int brute_max_saturated(const Board& b) {
  if (b.has_isolated_cells())
    throw DomainError("brute_max_saturated: board has an isolated cell");
  const auto& cells = b.cells();
  const int n = b.size();
  std::vector<std::uint32_t> dominoes;
  for (int i = 0; i < n; ++i)
    for (const Cell& c : neighbors(b.kind(), cells[i])) {
      auto it = std::lower_bound(cells.begin(), cells.end(), c);
      if (it != cells.end() && *it == c) {
        const int j = static_cast<int>(it - cells.begin());
        if (j > i) dominoes.push_back((1u << i) | (1u << j));
      }
    }
  const int m = static_cast<int>(dominoes.size());
  if (m > 24)
    throw CapacityError("brute_max_saturated is guarded to 24 dominoes, got " + std::to_string(m));
  const std::uint32_t full = (1u << n) - 1;

  int best = 0;
  std::vector<int> chosen;
  for (std::uint64_t sub = 1; sub < (1ull << m); ++sub) {
    std::uint32_t cover = 0;
    chosen.clear();
    for (int i = 0; i < m; ++i)
      if (sub & (1ull << i)) {
        cover |= dominoes[i];
        chosen.push_back(i);
      }
    if (cover != full) continue;
    if (static_cast<int>(chosen.size()) <= best) continue;
    // saturated iff every domino keeps a private cell
    bool saturated = true;
    for (std::size_t a = 0; a < chosen.size() && saturated; ++a) {
      std::uint32_t others = 0;
      for (std::size_t t = 0; t < chosen.size(); ++t)
        if (t != a) others |= dominoes[chosen[t]];
      if ((dominoes[chosen[a]] & ~others) == 0) saturated = false;
    }
    if (saturated) best = static_cast<int>(chosen.size());
  }
  return best;
}

int brute_x(const Board& b) {
  const auto& cells = b.cells();
  const int n = b.size();
  // candidate centers: every ambient cell whose closed neighborhood meets b
  std::map<Cell, std::uint32_t> coverage;
  for (int i = 0; i < n; ++i) {
    coverage[cells[i]] |= 1u << i;
    for (const Cell& c : neighbors(b.kind(), cells[i])) coverage[c] |= 1u << i;
  }
  std::vector<std::uint32_t> cand;
  for (const auto& [c, mask] : coverage) cand.push_back(mask);
  const int m = static_cast<int>(cand.size());
  if (m > 28)
    throw CapacityError("brute_x is guarded to 28 candidate centers, got " + std::to_string(m));
  const std::uint32_t full = (1u << n) - 1;
  for (int k = 1; k <= m; ++k) {
    Combinations combos(m, k);
    while (combos.next()) {
      std::uint32_t cover = 0;
      for (int i : combos.pick) cover |= cand[i];
      if (cover == full) return k;
    }
  }
  throw Error("internal: the board's own cells always form a cover");
}

}  // namespace satdom::oracle
