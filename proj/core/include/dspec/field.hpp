#pragma once

// Finite fields F_{p^n} for odd primes p.
//
// Two routes to the arithmetic live here:
//   * Field works on FieldElement coefficient vectors with polynomial
//     multiplication modulo the defining polynomial and square-and-multiply
//     exponentiation. It is slow and simple, and serves as the reference.
//   * FieldTables works on packed element indices using log/exp, digit and
//     character tables. The enumeration kernels in the other modules use it.
// Tests require the two routes to agree.
//
// Element indices encode coefficient vectors as  index = sum_i c_i * p^i,
// so for a prime field the index is the residue itself. Enumeration runs
// through indices 0 .. q-1 in increasing order.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <utility>
#include <vector>

namespace dspec {

inline constexpr std::uint64_t kDefaultSizeCap = 1'000'000;
// Indices are 32-bit; no cap override may exceed this.
inline constexpr std::uint64_t kHardSizeLimit = std::uint64_t{1} << 31;

using Index = std::uint32_t;

struct FieldElement {
  std::vector<std::uint32_t> coeffs;  // low degree first, length n, each in [0, p)

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

// Output of the quadratic character: -1, 0 or +1.
class CharValue {
 public:
  constexpr CharValue() = default;
  constexpr explicit CharValue(int v) : value_(static_cast<std::int8_t>(v > 0 ? 1 : (v < 0 ? -1 : 0))) {}

  constexpr int value() const { return value_; }
  constexpr operator int() const { return value_; }  // NOLINT: used directly in integer formulas

  friend constexpr bool operator==(CharValue, CharValue) = default;

 private:
  std::int8_t value_ = 0;
};

bool is_prime(std::uint64_t v);

// (p, n) with q = p^n, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> decompose_prime_power(std::uint64_t q);

// Rabin irreducibility test over F_p. `monic` is low degree first and must
// end in 1.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

class FieldTables;

class Field {
 public:
  // Builds F_{p^n} using the lexicographically smallest monic irreducible of
  // degree n (coefficients compared from the constant term upwards).
  // Throws InvalidArgument for even or non-prime p, n == 0, or p^n > size_cap.
  static Field build(std::uint64_t p, std::uint32_t n, std::uint64_t size_cap = kDefaultSizeCap);

  std::uint32_t p() const;
  std::uint32_t n() const;
  std::uint32_t q() const;
  // n + 1 coefficients, low degree first, leading coefficient 1.
  const std::vector<std::uint32_t>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  // Image of an integer under Z -> F_p -> F_q.
  FieldElement from_integer(std::int64_t v) const;
  FieldElement element(Index idx) const;
  Index index(const FieldElement& x) const;
  bool is_zero(const FieldElement& x) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  // Throws InvalidArgument for zero.
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;

  // x^((q-1)/2) mapped to {-1, 0, +1}.
  CharValue quadratic_character(const FieldElement& x) const;

  // Canonical root x^((q+1)/4); nullopt for nonsquares. Requires q = 3 mod 4
  // (PreconditionError otherwise).
  std::optional<FieldElement> sqrt(const FieldElement& x) const;

  auto enumerate() const {
    return std::views::iota(Index{0}, q()) |
           std::views::transform([this](Index i) { return element(i); });
  }

  const FieldTables& tables() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p() == b.p() && a.n() == b.n() && a.modulus() == b.modulus();
  }

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// Table-driven arithmetic on element indices. Immutable; shared by every
// copy of the owning Field.
class FieldTables {
 public:
  explicit FieldTables(const Field& field);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return q_; }

  Index add(Index a, Index b) const {
    if (n_ == 1) {
      const Index s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_digits(a, b);
  }

  Index sub(Index a, Index b) const {
    if (n_ == 1) return a >= b ? a - b : a + p_ - b;
    return sub_digits(a, b);
  }

  Index neg(Index a) const { return sub(0, a); }

  Index mul(Index a, Index b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Index square(Index a) const { return mul(a, a); }

  // Throws InvalidArgument for zero.
  Index inv(Index a) const;

  Index pow(Index a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1))];
  }

  CharValue chi(Index a) const { return CharValue(chi_[a]); }
  std::span<const std::int8_t> chi_table() const { return chi_; }

  Index from_integer(std::int64_t v) const;

  // Smallest-index primitive element.
  Index generator() const { return exp_[1]; }
  std::uint32_t log(Index a) const { return log_[a]; }

  // x -> x^d for every index x. Uses logarithms.
  std::vector<Index> power_table(std::uint64_t d) const;

 private:
  Index add_digits(Index a, Index b) const;
  Index sub_digits(Index a, Index b) const;

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> place_;   // p^i
  std::vector<std::uint16_t> digits_;  // digits_[x * n + i] = c_i(x); only for n > 1
  std::vector<std::uint32_t> log_;     // log_[0] unused
  std::vector<Index> exp_;             // length 2(q-1), so exp_[log a + log b] needs no reduction
  std::vector<std::int8_t> chi_;
};

}  // namespace dspec
