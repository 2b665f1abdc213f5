#include "satdom/detail/setcover.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace satdom::detail {

int mask_count(const Mask& m) {
  int c = 0;
  for (std::uint64_t w : m) c += std::popcount(w);
  return c;
}

int count_and_not(const Mask& x, const Mask& y) {
  int c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) c += std::popcount(x[i] & ~y[i]);
  return c;
}

void or_into(Mask& dst, const Mask& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

namespace {

struct Search {
  const std::vector<Mask>& sets;
  const std::vector<std::vector<int>>& covers_of;  // element -> set indices
  const Mask& all;
  int n;
  int words;
  int max_set;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  int best = 0;
  std::vector<int> best_sets;
  std::vector<int> cur;

  void dfs(const Mask& covered, std::vector<char>& excluded) {
    if (exhausted) return;
    const int uncovered = n - mask_count(covered);
    if (uncovered == 0) {
      if (static_cast<int>(cur.size()) < best) {
        best = static_cast<int>(cur.size());
        best_sets = cur;
      }
      return;
    }
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (static_cast<int>(cur.size()) + (uncovered + max_set - 1) / max_set >= best) return;

    int e = -1;
    for (int w = 0; w < words; ++w) {
      const std::uint64_t free_bits = all[w] & ~covered[w];
      if (free_bits) {
        e = w * 64 + std::countr_zero(free_bits);
        break;
      }
    }

    std::vector<std::pair<int, int>> cands;  // (-residual coverage, set)
    for (int s : covers_of[e])
      if (!excluded[s]) cands.emplace_back(-count_and_not(sets[s], covered), s);
    std::sort(cands.begin(), cands.end());

    std::vector<int> locally_excluded;
    for (const auto& [neg, s] : cands) {
      Mask cov2 = covered;
      or_into(cov2, sets[s]);
      cur.push_back(s);
      dfs(cov2, excluded);
      cur.pop_back();
      if (exhausted) break;
      // covers using s are fully explored below this node
      excluded[s] = 1;
      locally_excluded.push_back(s);
    }
    for (int s : locally_excluded) excluded[s] = 0;
  }
};

}  // namespace

SetCoverOutcome min_set_cover(int n_elements, const std::vector<Mask>& sets,
                              std::uint64_t node_budget) {
  const int words = (n_elements + 63) / 64;
  Mask all(words, 0);
  for (int e = 0; e < n_elements; ++e) all[e / 64] |= 1ull << (e % 64);

  std::vector<std::vector<int>> covers_of(n_elements);
  int max_set = 1;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    max_set = std::max(max_set, mask_count(sets[s]));
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = sets[s][w];
      while (bits) {
        covers_of[w * 64 + std::countr_zero(bits)].push_back(static_cast<int>(s));
        bits &= bits - 1;
      }
    }
  }

  // greedy incumbent
  std::vector<int> greedy;
  Mask covered(words, 0);
  while (mask_count(covered) < n_elements) {
    int bs = -1, bcov = -1;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      const int cov = count_and_not(sets[s], covered);
      if (cov > bcov) {
        bcov = cov;
        bs = static_cast<int>(s);
      }
    }
    greedy.push_back(bs);
    or_into(covered, sets[bs]);
  }

  const int root_lb = (n_elements + max_set - 1) / max_set;
  Search search{sets, covers_of, all, n_elements, words, max_set, node_budget};
  search.best = static_cast<int>(greedy.size());
  search.best_sets = greedy;
  if (search.best > root_lb) {
    Mask cov0(words, 0);
    std::vector<char> ex0(sets.size(), 0);
    search.dfs(cov0, ex0);
  }

  SetCoverOutcome out;
  out.solved = !search.exhausted;
  out.best = search.best;
  std::sort(search.best_sets.begin(), search.best_sets.end());
  out.chosen = std::move(search.best_sets);
  out.root_lower_bound = root_lb;
  out.nodes = search.nodes;
  return out;
}

}  // namespace satdom::detail
