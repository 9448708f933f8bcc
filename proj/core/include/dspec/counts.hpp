#pragma once

// Solution counts for the equation systems behind the differential
// spectrum of x^((q+3)/2):
//
//   quadratic system   y1 + y2 + y3 + 1 = 0,  y1^2 + y2^2 + y3^2 + 1 = 0
//   d-system           y1 + y2 + y3 + 1 = 0,  y1^d + y2^d + y3^d + 1 = 0
//   four-variable      x1 - x2 + x3 - x4 = 0, x1^d - x2^d + x3^d - x4^d = 0
//
// with (y1, y2, y3) in (F_q^*)^3 bucketed by their quadratic characters.
// Every count has a brute-force oracle and, in the regime q = 3 mod 4 and
// p != 3, a closed form in q, lambda1, lambda2 and chi(-3).

#include <array>
#include <cstdint>
#include <string>

#include "dspec/budget.hpp"
#include "dspec/field.hpp"

namespace dspec {

// (chi(y1), chi(y2), chi(y3)), each +1 or -1.
struct SignTriple {
  int i = 1;
  int j = 1;
  int k = 1;

  // Bit 2 set for i = -1, bit 1 for j, bit 0 for k.
  constexpr std::size_t slot() const {
    return (i < 0 ? 4u : 0u) | (j < 0 ? 2u : 0u) | (k < 0 ? 1u : 0u);
  }
  static constexpr SignTriple from_slot(std::size_t s) {
    return SignTriple{(s & 4) ? -1 : 1, (s & 2) ? -1 : 1, (s & 1) ? -1 : 1};
  }
  std::string label() const;

  friend constexpr bool operator==(SignTriple, SignTriple) = default;
};

class SignCounts {
 public:
  std::int64_t& operator[](SignTriple t) { return counts_[t.slot()]; }
  std::int64_t operator[](SignTriple t) const { return counts_[t.slot()]; }
  std::int64_t slot(std::size_t s) const { return counts_.at(s); }
  std::int64_t& slot(std::size_t s) { return counts_.at(s); }
  std::int64_t total() const;

  // The three orbit representatives (1,1,1), (1,1,-1), (1,-1,-1) weighted
  // by orbit size: N1 + 4 N2 + 3 N3.
  std::int64_t weighted_representatives() const;

  friend bool operator==(const SignCounts&, const SignCounts&) = default;

 private:
  std::array<std::int64_t, 8> counts_{};
};

// Requires q = 3 mod 4 and p != 3 (PreconditionError).
void require_regime(const Field& field, const std::string& what);

// Brute force over (y1, y2) in (F_q^*)^2 with y3 = -1 - y1 - y2.
SignCounts count_quadratic_system_brute(const Field& field, const Budget& budget = {}, unsigned workers = 1);

// N(1,1,1)           = (q + 3 l1 - 6 l2 - 15 - 16 chi(-3)) / 8
// N(1,1,-1) orbit    = (q - 3 l1 - 3 - 4 chi(-3)) / 8        (also N(-1,-1,-1))
// N(1,-1,-1) orbit   = (q + 3 l1 + 2 l2 + 1) / 8
// Throws InexactDivision when a numerator is not a multiple of 8.
SignCounts count_quadratic_system_closed(std::int64_t q, std::int64_t lambda1, std::int64_t lambda2,
                                         CharValue chi_neg3);

struct DSystemCounts {
  std::int64_t total = 0;
  SignCounts by_sign;
};

// Brute force over (y1, y2) in (F_q^*)^2 with a precomputed d-th power
// table. For d = (q+3)/2 the table is built as chi(y) y^2, after checking
// that shortcut against square-and-multiply on 100 random elements.
DSystemCounts count_d_system_brute(const Field& field, std::uint64_t d, const Budget& budget = {},
                                   unsigned workers = 1);

// n4 = (29 q - 9 l1 - 6 l2 - 75 - 32 chi(-3)) / 8.
std::int64_t count_d_system_closed(std::int64_t q, std::int64_t lambda1, std::int64_t lambda2,
                                   CharValue chi_neg3);

// N4 = q^2 + (q - 1) sum_b delta(1, b)^2 from the single row a = 1.
std::int64_t n4_ddt_oracle(const Field& field, std::uint64_t d, unsigned workers = 1);

// N4 = sum over all (a, b) of delta(a, b)^2, every row computed directly
// from its definition without the power-map row scaling. O(q^2).
std::int64_t n4_direct(const Field& field, std::uint64_t d, const Budget& budget = {}, unsigned workers = 1);

// N4 = 1 + (q - 1)(29 q - 9 l1 - 6 l2 + 5) / 8.
std::int64_t N4_closed(std::int64_t q, std::int64_t lambda1, std::int64_t lambda2);

// N4 = 1 + (10 + 4 chi(-3))(q - 1) + n4 (q - 1): solutions with a zero
// coordinate plus rescaled zero-free ones.
std::int64_t N4_decomposition(std::int64_t q, CharValue chi_neg3, std::int64_t n4);

struct SolutionCounts {
  std::int64_t q = 0;
  std::uint64_t d = 0;
  SignCounts n_ijk;
  std::int64_t n4 = 0;
  std::int64_t N4 = 0;
};

}  // namespace dspec
