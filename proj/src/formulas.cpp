#include "satdom/formulas.hpp"

#include <algorithm>
#include <array>

#include "satdom/error.hpp"

namespace satdom {

namespace {

constexpr std::array<long long, 19> kFSquare = {1,  2,  3,  4,  7,  10, 12, 16, 20, 24,
                                                29, 35, 40, 47, 53, 60, 68, 76, 84};

constexpr std::array<int, 6> kFourStripExceptions = {1, 2, 3, 5, 6, 9};

constexpr int kMaxSequenceCount = 1'000'000;  // output-size guard

}  // namespace

std::string to_string(SequenceId id) {
  switch (id) {
    case SequenceId::A193764: return "A193764";
    case SequenceId::A193765: return "A193765";
    case SequenceId::A193766: return "A193766";
    case SequenceId::A193767: return "A193767";
    case SequenceId::A193768: return "A193768";
    case SequenceId::A104519: return "A104519";
    case SequenceId::A008620: return "A008620";
    case SequenceId::A004523: return "A004523";
    case SequenceId::A008619: return "A008619";
    case SequenceId::A001651: return "A001651";
    case SequenceId::A037915: return "A037915";
    case SequenceId::A004652_analogue: return "A004652-analogue";
  }
  return "?";
}

std::optional<SequenceId> sequence_from_string(std::string_view s) {
  if (s == "A193764") return SequenceId::A193764;
  if (s == "A193765") return SequenceId::A193765;
  if (s == "A193766") return SequenceId::A193766;
  if (s == "A193767") return SequenceId::A193767;
  if (s == "A193768") return SequenceId::A193768;
  if (s == "A104519") return SequenceId::A104519;
  if (s == "A008620") return SequenceId::A008620;
  if (s == "A004523") return SequenceId::A004523;
  if (s == "A008619") return SequenceId::A008619;
  if (s == "A001651") return SequenceId::A001651;
  if (s == "A037915") return SequenceId::A037915;
  if (s == "A004652-analogue" || s == "A004652") return SequenceId::A004652_analogue;
  return std::nullopt;
}

int sequence_offset(SequenceId id) {
  return (id == SequenceId::A193764 || id == SequenceId::A193765) ? 2 : 1;
}

long long gamma_rect_formula(long long m, long long n) {
  if (std::min(m, n) < 16)
    throw CapacityError("gamma_rect_formula is proven for min(m,n) >= 16; use gamma_rect_dp "
                        "or the tables below that");
  return (n + 2) * (m + 2) / 5 - 4;
}

long long f_square_known(int n) {
  if (n < 1 || n > 19)
    throw CapacityError("f_square_known covers 1 <= n <= 19, got " + std::to_string(n));
  return kFSquare[static_cast<std::size_t>(n - 1)];
}

long long f_square_formula(long long n) {
  if (n < 7 || n == 13)
    throw CapacityError("f_square_formula is valid for n >= 7, n != 13 (it undercounts at "
                        "n = 6 and n = 13); got " + std::to_string(n));
  return (n + 2) * (n + 2) / 5 - 4;
}

long long f_strip(int m, long long n) {
  if (m < 1 || m > 4) throw CapacityError("f_strip covers widths 1..4, got " + std::to_string(m));
  if (n < 1) throw DomainError("strip length must be positive");
  switch (m) {
    case 1: return (n + 2) / 3;
    case 2: return (n + 2) / 2;
    case 3: return (3 * n + 4) / 4;
    default: {
      const bool exceptional =
          n <= 9 && std::find(kFourStripExceptions.begin(), kFourStripExceptions.end(),
                              static_cast<int>(n)) != kFourStripExceptions.end();
      return exceptional ? n + 1 : n;
    }
  }
}

long long d_strip(int m, long long n) { return m * n - f_strip(m, n); }

std::vector<long long> sequence(SequenceId id, int count) {
  if (count < 1) throw DomainError("term count must be positive");
  if (count > kMaxSequenceCount)
    throw CapacityError("term count capped at " + std::to_string(kMaxSequenceCount));
  const int first = sequence_offset(id);
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const long long n = first + i;
    switch (id) {
      case SequenceId::A193764:
      case SequenceId::A193765: {
        if (n > 19)
          throw CapacityError(to_string(id) + " is tabulated through n = 19; later terms of "
                              "d(n x n) need solver escalation");
        const long long d = n * n - f_square_known(static_cast<int>(n));
        out.push_back(id == SequenceId::A193764 ? d : d + 1);
        break;
      }
      case SequenceId::A193766: out.push_back(d_strip(3, n)); break;
      case SequenceId::A193767: out.push_back(d_strip(4, n)); break;
      case SequenceId::A193768: out.push_back(f_strip(4, n)); break;
      case SequenceId::A104519:
        out.push_back(n <= 19 ? f_square_known(static_cast<int>(n)) : f_square_formula(n));
        break;
      case SequenceId::A008620: out.push_back(f_strip(1, n)); break;
      case SequenceId::A004523: out.push_back(d_strip(1, n)); break;
      case SequenceId::A008619: out.push_back(f_strip(2, n)); break;
      case SequenceId::A001651: out.push_back(d_strip(2, n)); break;
      case SequenceId::A037915: out.push_back(f_strip(3, n)); break;
      case SequenceId::A004652_analogue: out.push_back((n * n + 3) / 4); break;
    }
  }
  return out;
}

}  // namespace satdom
