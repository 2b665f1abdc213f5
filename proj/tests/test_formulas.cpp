#include "doctest.h"
#include "satdom/domgraph.hpp"
#include "satdom/error.hpp"
#include "satdom/formulas.hpp"
#include "satdom/oracle.hpp"

using namespace satdom;

TEST_CASE("gamma_rect_formula") {
  CHECK(gamma_rect_formula(16, 16) == 60);
  CHECK(gamma_rect_formula(17, 17) == 68);
  CHECK(gamma_rect_formula(16, 20) == 75);
  CHECK_THROWS_AS(gamma_rect_formula(15, 20), CapacityError);
  // integrality is built in; monotonicity in each argument over the corner
  for (int m = 16; m <= 19; ++m)
    for (int n = 16; n <= 19; ++n) {
      CHECK(gamma_rect_formula(m, n) <= gamma_rect_formula(m + 1, n));
      CHECK(gamma_rect_formula(m, n) <= gamma_rect_formula(m, n + 1));
      CHECK(gamma_rect_formula(m, n) == (m + 2) * (n + 2) / 5 - 4);
    }
}

TEST_CASE("f_square_known table") {
  CHECK(f_square_known(1) == 1);
  CHECK(f_square_known(7) == 12);
  CHECK(f_square_known(13) == 40);
  CHECK(f_square_known(19) == 84);
  CHECK_THROWS_AS(f_square_known(0), CapacityError);
  CHECK_THROWS_AS(f_square_known(20), CapacityError);
}

TEST_CASE("f_square_formula and its validity domain") {
  CHECK(f_square_formula(7) == 12);
  CHECK(f_square_formula(12) == 35);
  CHECK(f_square_formula(14) == 47);
  for (int n = 7; n <= 19; ++n) {
    if (n == 13) continue;
    CHECK(f_square_formula(n) == f_square_known(n));
  }
  // the formula undercounts at 6 and 13; both are rejected
  CHECK_THROWS_AS(f_square_formula(6), CapacityError);
  CHECK_THROWS_AS(f_square_formula(13), CapacityError);
  CHECK((6 + 2) * (6 + 2) / 5 - 4 == 8);  // would disagree with f(6) = 10
  CHECK(f_square_known(6) == 10);
  CHECK((13 + 2) * (13 + 2) / 5 - 4 == 41);  // would disagree with f(13) = 40
}

TEST_CASE("strip formulas") {
  CHECK(f_strip(1, 7) == 3);
  CHECK(f_strip(3, 4) == 4);
  CHECK(f_strip(4, 9) == 10);
  CHECK(d_strip(1, 6) == 4);
  CHECK(d_strip(2, 5) == 7);
  CHECK(d_strip(4, 9) == 26);
  CHECK_THROWS_AS(f_strip(5, 3), CapacityError);
  CHECK_THROWS_AS(f_strip(0, 3), CapacityError);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 60; ++n) {
      CHECK(d_strip(m, n) + f_strip(m, n) == static_cast<long long>(m) * n);
      CHECK(f_strip(m, n) == gamma_rect_dp(m, n));
    }
}

TEST_CASE("the 4-strip exception list is what the dp says it is") {
  for (int n = 1; n <= 30; ++n) {
    const bool exceptional = (n == 1 || n == 2 || n == 3 || n == 5 || n == 6 || n == 9);
    CHECK(gamma_rect_dp(4, n) == (exceptional ? n + 1 : n));
  }
}

TEST_CASE("sequence generation") {
  CHECK(sequence(SequenceId::A193764, 6) == std::vector<long long>{2, 6, 12, 18, 26, 37});
  CHECK(sequence(SequenceId::A193765, 6) == std::vector<long long>{3, 7, 13, 19, 27, 38});
  CHECK(sequence(SequenceId::A004652_analogue, 5) == std::vector<long long>{1, 1, 3, 4, 7});
  CHECK(sequence(SequenceId::A104519, 19) ==
        std::vector<long long>{1, 2, 3, 4, 7, 10, 12, 16, 20, 24, 29, 35, 40, 47, 53, 60, 68,
                               76, 84});
  CHECK(sequence(SequenceId::A008620, 7) == std::vector<long long>{1, 1, 1, 2, 2, 2, 3});
  CHECK(sequence(SequenceId::A004523, 6) == std::vector<long long>{0, 1, 2, 2, 3, 4});
  CHECK(sequence(SequenceId::A008619, 6) == std::vector<long long>{1, 2, 2, 3, 3, 4});
  CHECK(sequence(SequenceId::A001651, 6) == std::vector<long long>{1, 2, 4, 5, 7, 8});
  CHECK(sequence(SequenceId::A037915, 8) == std::vector<long long>{1, 2, 3, 4, 4, 5, 6, 7});
  // the 3 x n strip: the formula, not the example's arithmetic slip
  CHECK(sequence(SequenceId::A193766, 5) == std::vector<long long>{2, 4, 6, 8, 11});
  CHECK(sequence(SequenceId::A193767, 4) == std::vector<long long>{2, 5, 8, 12});
  CHECK(sequence(SequenceId::A193768, 10) ==
        std::vector<long long>{2, 3, 4, 4, 6, 7, 7, 8, 10, 10});

  // A104519 continues past the table by the proven closed form
  const auto ext = sequence(SequenceId::A104519, 25);
  CHECK(ext[19] == 92);   // n = 20
  CHECK(ext[24] == 141);  // n = 25: floor(27^2/5) - 4

  CHECK(sequence(SequenceId::A193764, 18).back() == 19 * 19 - 84);
  CHECK_THROWS_AS(sequence(SequenceId::A193764, 19), CapacityError);
  CHECK_THROWS_AS(sequence(SequenceId::A193764, 0), DomainError);
}

TEST_CASE("sequences match the table and the oracles") {
  // A193764(n) = n^2 - f_square_known(n) for n = 2..7
  const auto d = sequence(SequenceId::A193764, 6);
  for (int n = 2; n <= 7; ++n)
    CHECK(d[static_cast<std::size_t>(n - 2)] == n * n - f_square_known(n));

  // d(3 x n) against the saturated-covering oracle
  const auto d3 = sequence(SequenceId::A193766, 4);
  for (int n = 1; n <= 4; ++n)
    CHECK(d3[static_cast<std::size_t>(n - 1)] == oracle::brute_max_saturated(make_rectangle(3, n)));

  // d(4 x n) and f(4 x n) against the oracles where they fit
  const auto d4 = sequence(SequenceId::A193767, 3);
  const auto f4 = sequence(SequenceId::A193768, 3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(d4[static_cast<std::size_t>(n - 1)] == oracle::brute_max_saturated(make_rectangle(4, n)));
    CHECK(f4[static_cast<std::size_t>(n - 1)] == oracle::brute_min_tiling(make_rectangle(4, n)));
  }
}

TEST_CASE("sequence ids round trip") {
  for (SequenceId id :
       {SequenceId::A193764, SequenceId::A193765, SequenceId::A193766, SequenceId::A193767,
        SequenceId::A193768, SequenceId::A104519, SequenceId::A008620, SequenceId::A004523,
        SequenceId::A008619, SequenceId::A001651, SequenceId::A037915,
        SequenceId::A004652_analogue})
    CHECK(sequence_from_string(to_string(id)) == id);
  CHECK(sequence_from_string("A004652") == SequenceId::A004652_analogue);
  CHECK_FALSE(sequence_from_string("A000001").has_value());
}
