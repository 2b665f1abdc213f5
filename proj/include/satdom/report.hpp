#pragma once

#include <cstdint>
#include <optional>

namespace satdom {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

enum class SolveStatus { solved, budget_exhausted };

// Result of an exact search. On budget exhaustion the value is not known;
// only the bounds are meaningful and the witness, if present, certifies the
// upper bound.
template <typename Witness>
struct SolveReport {
  SolveStatus status = SolveStatus::solved;
  int value = 0;
  int lower_bound = 0;
  int upper_bound = 0;
  std::optional<Witness> witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;

  bool solved() const { return status == SolveStatus::solved; }
};

}  // namespace satdom
