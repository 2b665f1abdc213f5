#pragma once

#include <cstdint>
#include <vector>

namespace satdom::detail {

// Bitmask over search elements, fixed word count per instance.
using Mask = std::vector<std::uint64_t>;

int mask_count(const Mask& m);
int count_and_not(const Mask& x, const Mask& y);  // |x \ y|
void or_into(Mask& dst, const Mask& src);

struct SetCoverOutcome {
  bool solved = false;
  int best = 0;             // optimal size when solved, else best incumbent
  std::vector<int> chosen;  // sorted set indices of the best cover found
  int root_lower_bound = 0;
  std::uint64_t nodes = 0;
};

// Exact minimum set cover by branch and bound: branch on the least uncovered
// element, candidates are the sets covering it in decreasing
// residual-coverage order (ties to the lower set index), lower bound
// ceil(uncovered / max set size), initial incumbent from a greedy
// max-coverage pass, tried sets excluded from later branches. Deterministic.
//
// Every element must be coverable; sets[i] is a bitmask over n_elements.
SetCoverOutcome min_set_cover(int n_elements, const std::vector<Mask>& sets,
                              std::uint64_t node_budget);

}  // namespace satdom::detail
