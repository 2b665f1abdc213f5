#include "satdom/domgraph.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstring>
#include <numeric>

#include "satdom/detail/setcover.hpp"
#include "satdom/error.hpp"

namespace satdom {

AdjacencyGraph adjacency_graph(const Board& b) {
  AdjacencyGraph g{b, {}};
  g.adj.resize(b.cells().size());
  for (std::size_t i = 0; i < b.cells().size(); ++i) {
    for (const Cell& n : b.board_neighbors(b.cells()[i]))
      g.adj[i].push_back(*b.index_of(n));
    std::sort(g.adj[i].begin(), g.adj[i].end());
  }
  return g;
}

bool dominates(const AdjacencyGraph& g, const DominatingSet& d) {
  std::vector<char> dom(g.size(), 0);
  for (int v : d.members) {
    if (v < 0 || v >= g.size()) return false;
    dom[v] = 1;
    for (int u : g.adj[v]) dom[u] = 1;
  }
  return std::find(dom.begin(), dom.end(), 0) == dom.end();
}

SolveReport<DominatingSet> gamma_exact(const AdjacencyGraph& g, std::uint64_t node_budget) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = g.size();
  if (n == 0) throw DomainError("gamma_exact needs a nonempty graph");
  const int words = (n + 63) / 64;

  // minimum dominating set == minimum cover by closed neighborhoods
  std::vector<detail::Mask> closed(n, detail::Mask(words, 0));
  for (int v = 0; v < n; ++v) {
    closed[v][v / 64] |= 1ull << (v % 64);
    for (int u : g.adj[v]) closed[v][u / 64] |= 1ull << (u % 64);
  }
  detail::SetCoverOutcome out = detail::min_set_cover(n, closed, node_budget);

  SolveReport<DominatingSet> rep;
  rep.nodes_explored = out.nodes;
  rep.witness = DominatingSet{out.chosen};  // certifies the upper bound
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

// Profile trits: 0 = in set, 1 = dominated, 2 = not yet dominated (must be
// dominated by its right neighbor). Least-significant trit is row 0.
using V = std::uint32_t;

void dp_sweep_column(std::vector<V>& cur, std::vector<V>& nxt, int m,
                     const std::vector<std::size_t>& pow3, V inf,
                     std::vector<std::vector<V>>* steps) {
  const std::size_t P = pow3[m];
  if (steps) (*steps)[0] = cur;
  for (int i = 0; i < m; ++i) {
    std::fill(nxt.begin(), nxt.end(), inf);
    const std::size_t p3i = pow3[i];
    const std::size_t p3u = i > 0 ? pow3[i - 1] : 0;
    for (std::size_t prof = 0; prof < P; ++prof) {
      const V v = cur[prof];
      if (v >= inf) continue;
      const int old_state = static_cast<int>((prof / p3i) % 3);
      const int up_state = i > 0 ? static_cast<int>((prof / p3u) % 3) : -1;
      // place (i, col) in the set: dominates the cells left and up
      {
        std::size_t q = prof - static_cast<std::size_t>(old_state) * p3i;
        if (up_state == 2) q -= p3u;
        if (nxt[q] > v + 1) nxt[q] = v + 1;
      }
      // leave (i, col) out; the left cell must not be awaiting us
      if (old_state != 2) {
        const int st = (old_state == 0 || up_state == 0) ? 1 : 2;
        const std::size_t q = prof + (static_cast<std::size_t>(st) - old_state) * p3i;
        if (nxt[q] > v) nxt[q] = v;
      }
    }
    cur.swap(nxt);
    if (steps) (*steps)[i + 1] = cur;
  }
}

bool profile_has_awaiting(std::size_t prof, int m) {
  for (int i = 0; i < m; ++i) {
    if (prof % 3 == 2) return true;
    prof /= 3;
  }
  return false;
}

}  // namespace

long long gamma_rect_dp(int m, long long n) {
  if (m < 1 || m > kRectDpMaxRows)
    throw CapacityError("gamma_rect_dp supports 1 <= m <= " + std::to_string(kRectDpMaxRows) +
                        " rows, got " + std::to_string(m));
  if (n < 1) throw DomainError("columns must be positive");

  std::vector<std::size_t> pow3(m + 1, 1);
  for (int i = 1; i <= m; ++i) pow3[i] = pow3[i - 1] * 3;
  const std::size_t P = pow3[m];
  const V inf = 0x3FFFFFFF;

  std::vector<V> cur(P, inf), nxt(P, inf);
  cur[(P - 1) / 2] = 0;  // virtual previous column: all cells dominated
  for (long long col = 0; col < n; ++col) dp_sweep_column(cur, nxt, m, pow3, inf, nullptr);

  V best = inf;
  for (std::size_t prof = 0; prof < P; ++prof)
    if (cur[prof] < best && !profile_has_awaiting(prof, m)) best = cur[prof];
  return static_cast<long long>(best);
}

RectDpResult gamma_rect_dp_with_witness(int m, long long n, std::size_t memory_budget_bytes) {
  if (m < 1 || m > kRectDpMaxRows)
    throw CapacityError("gamma_rect_dp supports 1 <= m <= " + std::to_string(kRectDpMaxRows) +
                        " rows, got " + std::to_string(m));
  if (n < 1) throw DomainError("columns must be positive");

  std::vector<std::size_t> pow3(m + 1, 1);
  for (int i = 1; i <= m; ++i) pow3[i] = pow3[i - 1] * 3;
  const std::size_t P = pow3[m];
  const V inf = 0x3FFFFFFF;

  // boundaries (n+1), per-cell step arrays (m+1), two sweep buffers
  const std::size_t need = (static_cast<std::size_t>(n) + m + 4) * P * sizeof(V);
  if (need > memory_budget_bytes) return {gamma_rect_dp(m, n), false, {}};

  // forward pass, keeping every column boundary
  std::vector<std::vector<V>> boundary(static_cast<std::size_t>(n) + 1);
  std::vector<V> cur(P, inf), nxt(P, inf);
  cur[(P - 1) / 2] = 0;
  boundary[0] = cur;
  for (long long col = 0; col < n; ++col) {
    dp_sweep_column(cur, nxt, m, pow3, inf, nullptr);
    boundary[static_cast<std::size_t>(col) + 1] = cur;
  }

  V best = inf;
  std::size_t target = 0;
  for (std::size_t prof = 0; prof < P; ++prof)
    if (cur[prof] < best && !profile_has_awaiting(prof, m)) {
      best = cur[prof];
      target = prof;
    }

  // backward walk, re-deriving the per-cell arrays inside each column
  std::vector<Cell> members;
  std::vector<std::vector<V>> steps(m + 1, std::vector<V>(P, inf));
  for (long long col = n - 1; col >= 0; --col) {
    cur = boundary[static_cast<std::size_t>(col)];
    dp_sweep_column(cur, nxt, m, pow3, inf, &steps);
    std::size_t q = target;
    V val = steps[m][q];
    for (int i = m - 1; i >= 0; --i) {
      const std::size_t p3i = pow3[i];
      const std::size_t p3u = i > 0 ? pow3[i - 1] : 0;
      const int qi = static_cast<int>((q / p3i) % 3);
      const int uq = i > 0 ? static_cast<int>((q / p3u) % 3) : -1;
      bool found = false;
      if (qi == 0 && val >= 1) {
        // cell (i, col) was placed in the set
        for (int s = 0; s < 3 && !found; ++s) {
          const std::size_t base = q + static_cast<std::size_t>(s) * p3i;
          for (int upgraded = 0; upgraded < 2 && !found; ++upgraded) {
            std::size_t p = base;
            if (upgraded) {
              if (uq != 1) continue;  // only 2 -> 1 upgrades happen
              p += p3u;
            } else if (uq == 2) {
              continue;  // placing would have resolved an awaiting up cell
            }
            if (steps[i][p] == val - 1) {
              members.push_back({i, static_cast<std::int32_t>(col)});
              q = p;
              val -= 1;
              found = true;
            }
          }
        }
      }
      if (!found && qi != 0) {
        for (int s = 0; s < 2 && !found; ++s) {
          const int st = (s == 0 || uq == 0) ? 1 : 2;
          if (st != qi) continue;
          const std::size_t p =
              q - static_cast<std::size_t>(qi) * p3i + static_cast<std::size_t>(s) * p3i;
          if (steps[i][p] == val) {
            q = p;
            found = true;
          }
        }
      }
      if (!found) throw Error("internal: dp witness reconstruction failed");
    }
    target = q;
  }
  std::sort(members.begin(), members.end());
  return {static_cast<long long>(best), true, std::move(members)};
}

FragmentTiling star_partition(const AdjacencyGraph& g, const DominatingSet& d) {
  if (g.size() == 0) throw DomainError("star_partition needs a nonempty graph");
  for (int v = 0; v < g.size(); ++v)
    if (g.adj[v].empty())
      throw DomainError("graph has isolated vertex " + to_string(g.board.cells()[v]));
  if (!dominates(g, d)) throw ValidationError("set does not dominate the graph");

  std::vector<char> in_d(g.size(), 0);
  for (int v : d.members) in_d[v] = 1;

  const auto& cells = g.board.cells();
  std::vector<detail::StarPiece> pieces;
  std::vector<int> piece_of(g.size(), -1);
  for (int v = 0; v < g.size(); ++v)
    if (in_d[v]) {
      piece_of[v] = static_cast<int>(pieces.size());
      pieces.push_back({cells[v], {cells[v]}});
    }
  // each non-member joins its least adjacent member
  for (int v = 0; v < g.size(); ++v) {
    if (in_d[v]) continue;
    for (int u : g.adj[v])
      if (in_d[u]) {
        auto& pc = pieces[piece_of[u]].cells;
        pc.insert(std::upper_bound(pc.begin(), pc.end(), cells[v]), cells[v]);
        break;
      }
  }
  auto out = detail::absorb_singletons(g.board, std::move(pieces));
  FragmentTiling t = detail::pieces_to_tiling(g.board, out);
  if (static_cast<int>(t.fragments.size()) > static_cast<int>(d.members.size()))
    throw ValidationError("star partition exceeded the dominating set size");
  return t;
}

}  // namespace satdom
