#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace satdom {

// Sequences named in the closing note, plus the triangular ceil(n^2/4)
// analogue of A004652.
enum class SequenceId {
  A193764,  // d(n x n), from n = 2 (a single cell has no domino covering)
  A193765,  // A193764(n) + 1: least k forcing a redundancy on the n x n board
  A193766,  // d(3 x n)
  A193767,  // d(4 x n)
  A193768,  // f(4 x n)
  A104519,  // f(n x n)
  A008620,  // f(1 x n) = ceil(n/3)
  A004523,  // d(1 x n) = n - ceil(n/3)
  A008619,  // f(2 x n) = floor((n+2)/2)
  A001651,  // d(2 x n) = 2n - floor((n+2)/2)
  A037915,  // f(3 x n) = floor((3n+4)/4)
  A004652_analogue,  // ceil(n^2/4): maximal-fragment cover of the side-n triangle
};

std::string to_string(SequenceId id);
std::optional<SequenceId> sequence_from_string(std::string_view s);
// Index of the first term (n = 2 for A193764/A193765, n = 1 otherwise).
int sequence_offset(SequenceId id);

// Eq-style closed form floor((n+2)(m+2)/5) - 4, proven for min(m,n) >= 16.
// Smaller boards must use gamma_rect_dp or the tables.
long long gamma_rect_formula(long long m, long long n);

// f(n x n) for 1 <= n <= 19, from the known-values table
// 1, 2, 3, 4, 7, 10, 12, 16, 20, 24, 29, 35, 40, 47, 53, 60, 68, 76, 84.
long long f_square_known(int n);

// Closed form floor((n+2)^2/5) - 4 for the square board. Valid for n >= 7
// except n = 13: the formula gives 8 at n = 6 (true value 10) and 41 at
// n = 13 (true value 40), so both are rejected.
long long f_square_formula(long long n);

// Strip formulas: f(1 x n) = ceil(n/3); f(2 x n) = floor((n+2)/2);
// f(3 x n) = floor((3n+4)/4); f(4 x n) = n+1 if n in {1,2,3,5,6,9} else n.
long long f_strip(int m, long long n);
long long d_strip(int m, long long n);  // m*n - f_strip(m, n)

// First `count` terms of the sequence. A193764/A193765 are table-backed and
// stop at n = 19 (larger squares would need solver escalation); A104519
// continues past the table with f_square_formula; the rest are closed forms.
std::vector<long long> sequence(SequenceId id, int count);

}  // namespace satdom
