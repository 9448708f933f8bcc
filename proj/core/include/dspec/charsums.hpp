#pragma once

// Quadratic character sums  sum_x chi(f(x))  over F_q: the generic
// enumerator, the closed form for quadratics, the two cubic sums that
// control the spectrum of x^((q+3)/2), their lift from F_p to F_{p^n},
// and six derived sums expressed through them.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dspec/field.hpp"

namespace dspec {

// Coefficients low degree first.
using Polynomial = std::vector<FieldElement>;
using IntPolynomial = std::vector<std::int64_t>;

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);
Polynomial embed(const Field& field, const IntPolynomial& f);

// sum over all x in F_q of chi(f(x)), by enumeration.
// Throws InvalidArgument for the zero polynomial.
std::int64_t char_sum(const Polynomial& f, const Field& field, unsigned workers = 1);
std::int64_t char_sum(const IntPolynomial& f, const Field& field, unsigned workers = 1);

// Closed form for a2 x^2 + a1 x + a0 with a2 != 0:
// -chi(a2) if the discriminant is nonzero, (q - 1) chi(a2) otherwise.
std::int64_t quadratic_sum_closed(const FieldElement& a2, const FieldElement& a1, const FieldElement& a0,
                                  const Field& field);

// x(x+1)(x-3) and x(x+1)(x-2).
IntPolynomial lambda1_cubic();
IntPolynomial lambda2_cubic();

enum class SumMethod { enumerated, recurrence };

std::string_view to_string(SumMethod m);

struct CharSums {
  std::int64_t lambda1 = 0;
  std::int64_t lambda2 = 0;
  SumMethod method = SumMethod::enumerated;

  friend bool operator==(const CharSums&, const CharSums&) = default;
};

// |sum| <= 2 sqrt(q), evaluated exactly as sum^2 <= 4q.
bool within_weil_bound(std::int64_t sum, std::uint64_t q);

CharSums lambda_sums_enumerated(const Field& field, unsigned workers = 1);

// Character sum of a fixed cubic over the prime field F_p.
struct GammaSeed {
  std::uint32_t p = 0;
  std::int64_t gamma1 = 0;
};

// Lifts gamma1 to F_{p^n}: with s_0 = 2, s_1 = -gamma1 and
// s_k = -gamma1 s_{k-1} - p s_{k-2}, returns -s_n. Exact integer arithmetic.
// Throws InvalidArgument when the seed violates |gamma1| <= 2 sqrt(p) or n == 0,
// std::overflow_error if s_n leaves int64.
std::int64_t gamma_recurrence(GammaSeed seed, std::uint32_t n);

// Seeds both cubic sums over F_p by enumeration and lifts them to degree n.
// The cubics are singular in characteristic 3, so p == 3 is refused with
// PreconditionError.
CharSums lambda_sums_recurrence(std::uint32_t p, std::uint32_t n);

enum class SixSumsScope { all, first_three };

// The six sums
//   1. x(x^2+x+1)                    =  lambda1
//   2. (x+1)(x^2+x+1)                = -lambda1
//   3. (x^2+x)(x^2+x+1)              = -lambda1 - 1
//   4. x(3x^2+2x+3)                  =  lambda2
//   5. (x^2+x+1)(3x^2+2x+3)          =  lambda2 - chi(3)
//   6. x(x^2+x+1)(3x^2+2x+3)         = -2 lambda1
// evaluated by enumeration and through the identities on the right.
// Items 4-6 are only defined for p != 3.
struct SixSums {
  std::size_t count = 0;
  std::array<std::int64_t, 6> enumerated{};
  std::array<std::int64_t, 6> closed{};

  bool agree() const;
  static std::string_view polynomial_name(std::size_t item);
};

std::array<IntPolynomial, 6> six_sum_polynomials();

// Requires q = 3 mod 4. With p == 3, scope must be first_three.
SixSums six_sums(const Field& field, SixSumsScope scope = SixSumsScope::all, unsigned workers = 1);

}  // namespace dspec
