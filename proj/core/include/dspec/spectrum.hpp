#pragma once

// Differential spectra of power maps x^d over F_q, and the closed form for
// d = (q+3)/2 when q = 3 mod 4 and p != 3.

#include <cstdint>
#include <map>
#include <optional>

#include "dspec/charsums.hpp"
#include "dspec/ddt.hpp"
#include "dspec/field.hpp"

namespace dspec {

struct DifferentialSpectrum {
  std::uint32_t q = 0;
  std::uint64_t d = 0;
  // omega[i] = #{b : delta(1, b) = i}. Brute spectra hold every i in
  // [0, delta_uniformity]; closed spectra hold the formula's four entries,
  // zeros included.
  std::map<std::uint32_t, std::int64_t> omega;
  std::uint32_t delta_uniformity = 0;

  std::int64_t at(std::uint32_t i) const;
  std::int64_t total() const;          // sum omega_i
  std::int64_t first_moment() const;   // sum i omega_i
  std::int64_t second_moment() const;  // sum i^2 omega_i
  // Entries with omega_i > 0.
  std::map<std::uint32_t, std::int64_t> support() const;
  // Same q, d and positive entries; explicit zeros are ignored.
  bool same_distribution(const DifferentialSpectrum& other) const;
};

// (q + 3) / 2.
std::uint64_t default_exponent(std::uint32_t q);

// q = 3 mod 4, p != 3, d = (q+3)/2.
bool in_closed_regime(const Field& field, std::uint64_t d);

DifferentialSpectrum spectrum_from_row(std::uint32_t q, std::uint64_t d, const DdtRow& row);
DifferentialSpectrum spectrum_brute(const Field& field, std::uint64_t d, unsigned workers = 1);

struct BranchCondition {
  CharValue chi2;
  CharValue chi3;
  CharValue chi_neg3;
  // chi((-1 + sqrt(-2)) / 2), only evaluated when chi(2) = chi(-3) = -1.
  std::optional<CharValue> chi_root;
  bool special_branch = false;
};

// special_branch is  chi(2) = chi(3) = -1  or  chi(2) = chi(-3) = chi(root) = -1.
// Both square roots of -2 are tried and must give the same character.
// Requires q = 3 mod 4 and p != 3.
BranchCondition branch_condition(const Field& field);

struct SpecialDeltas {
  Index half = 0;  // index of b = chi(2)/2
  // Predicted from the branch condition and chi(-3).
  std::int64_t delta_half = 0;
  std::int64_t delta_one = 0;
  std::int64_t omega1 = 0;
  std::int64_t omega3 = 0;
  // Read off ddt_row and spectrum_brute.
  std::int64_t observed_delta_half = 0;
  std::int64_t observed_delta_one = 0;
  std::int64_t observed_omega1 = 0;
  std::int64_t observed_omega3 = 0;

  bool consistent() const {
    return delta_half == observed_delta_half && delta_one == observed_delta_one && omega1 == observed_omega1 &&
           omega3 == observed_omega3;
  }
};

// delta(chi(2)/2) = 3 on the special branch, else 1; delta(1) = 3 + chi(-3);
// (omega1, omega3) = (0, 1) on the special branch, else (1, 0).
// Requires the closed regime with d = (q+3)/2.
SpecialDeltas delta_special(const Field& field, unsigned workers = 1);

// Closed-form spectrum of x^((q+3)/2) from the two cubic sums.
// Throws InexactDivision if a formula does not divide exactly, which
// signals wrong sums or a wrong branch.
DifferentialSpectrum spectrum_closed(const Field& field, const CharSums& sums);

struct Classification {
  bool is_permutation = false;
  bool is_apn = false;
  std::uint32_t delta_uniformity = 0;
};

// is_permutation from gcd(d, q-1) = 1; the rest from spectrum_brute.
Classification classify(const Field& field, std::uint64_t d, unsigned workers = 1);

// Upper bound on the uniformity of x^((q+3)/2): 1 for p = 3 with n even,
// 3 for p != 3 with q = 1 mod 4, 4 otherwise.
std::uint32_t uniformity_bound(const Field& field);

}  // namespace dspec
