#include "dspec/spectrum.hpp"

#include <numeric>
#include <string>

#include "dspec/checked.hpp"
#include "dspec/counts.hpp"
#include "dspec/errors.hpp"

namespace dspec {

std::int64_t DifferentialSpectrum::at(std::uint32_t i) const {
  const auto it = omega.find(i);
  return it == omega.end() ? 0 : it->second;
}

std::int64_t DifferentialSpectrum::total() const {
  std::int64_t s = 0;
  for (const auto& [i, w] : omega) s += w;
  return s;
}

std::int64_t DifferentialSpectrum::first_moment() const {
  std::int64_t s = 0;
  for (const auto& [i, w] : omega) s = checked::add(s, checked::mul(i, w));
  return s;
}

std::int64_t DifferentialSpectrum::second_moment() const {
  std::int64_t s = 0;
  for (const auto& [i, w] : omega) s = checked::add(s, checked::mul(std::int64_t{i} * i, w));
  return s;
}

std::map<std::uint32_t, std::int64_t> DifferentialSpectrum::support() const {
  std::map<std::uint32_t, std::int64_t> out;
  for (const auto& [i, w] : omega) {
    if (w > 0) out.emplace(i, w);
  }
  return out;
}

bool DifferentialSpectrum::same_distribution(const DifferentialSpectrum& other) const {
  return q == other.q && d == other.d && delta_uniformity == other.delta_uniformity &&
         support() == other.support();
}

std::uint64_t default_exponent(std::uint32_t q) { return (std::uint64_t{q} + 3) / 2; }

bool in_closed_regime(const Field& field, std::uint64_t d) {
  return field.q() % 4 == 3 && field.p() != 3 && d == default_exponent(field.q());
}

DifferentialSpectrum spectrum_from_row(std::uint32_t q, std::uint64_t d, const DdtRow& row) {
  DifferentialSpectrum s;
  s.q = q;
  s.d = d;
  std::int64_t top = 0;
  for (const auto v : row) top = std::max(top, v);
  s.delta_uniformity = static_cast<std::uint32_t>(top);
  for (std::uint32_t i = 0; i <= s.delta_uniformity; ++i) s.omega[i] = 0;
  for (const auto v : row) ++s.omega[static_cast<std::uint32_t>(v)];
  return s;
}

DifferentialSpectrum spectrum_brute(const Field& field, std::uint64_t d, unsigned workers) {
  return spectrum_from_row(field.q(), d, ddt_row(field, d, workers));
}

BranchCondition branch_condition(const Field& field) {
  require_regime(field, "branch condition");
  BranchCondition bc;
  bc.chi2 = field.quadratic_character(field.from_integer(2));
  bc.chi3 = field.quadratic_character(field.from_integer(3));
  bc.chi_neg3 = field.quadratic_character(field.from_integer(-3));
  if (bc.chi2 == CharValue(-1) && bc.chi_neg3 == CharValue(-1)) {
    // chi(-2) = chi(-1) chi(2) = +1, so -2 has a root.
    const auto root = field.sqrt(field.from_integer(-2));
    if (!root) throw Error("-2 has no square root although chi(-2) = 1");
    const FieldElement half = field.inv(field.from_integer(2));
    const FieldElement minus_one = field.from_integer(-1);
    const CharValue c1 = field.quadratic_character(field.mul(field.add(minus_one, *root), half));
    const CharValue c2 = field.quadratic_character(field.mul(field.sub(minus_one, *root), half));
    if (c1 != c2) throw Error("the two roots of x^2 + x + 3/4 have different characters");
    bc.chi_root = c1;
  }
  bc.special_branch = (bc.chi2 == CharValue(-1) && bc.chi3 == CharValue(-1)) ||
                      (bc.chi2 == CharValue(-1) && bc.chi_neg3 == CharValue(-1) && bc.chi_root == CharValue(-1));
  return bc;
}

SpecialDeltas delta_special(const Field& field, unsigned workers) {
  const BranchCondition bc = branch_condition(field);
  const FieldTables& t = field.tables();
  SpecialDeltas out;
  const Index half = t.inv(2);
  out.half = bc.chi2 > 0 ? half : t.neg(half);
  out.delta_half = bc.special_branch ? 3 : 1;
  out.delta_one = 3 + bc.chi_neg3;
  out.omega1 = bc.special_branch ? 0 : 1;
  out.omega3 = bc.special_branch ? 1 : 0;

  const std::uint64_t d = default_exponent(field.q());
  const DdtRow row = ddt_row(field, d, workers);
  const DifferentialSpectrum s = spectrum_from_row(field.q(), d, row);
  out.observed_delta_half = row[out.half];
  out.observed_delta_one = row[1];
  out.observed_omega1 = s.at(1);
  out.observed_omega3 = s.at(3);
  return out;
}

DifferentialSpectrum spectrum_closed(const Field& field, const CharSums& sums) {
  require_regime(field, "closed-form spectrum");
  const BranchCondition bc = branch_condition(field);
  const std::int64_t q = field.q();
  const std::int64_t mix = checked::add(checked::mul(9, sums.lambda1), checked::mul(6, sums.lambda2));

  DifferentialSpectrum s;
  s.q = field.q();
  s.d = default_exponent(field.q());
  s.omega[2] = checked::exact_div(11 * q + mix - 21, 32, "omega_2");
  if (bc.special_branch) {
    s.omega[0] = checked::exact_div(37 * q - mix + 5, 64, "omega_0");
    s.omega[3] = 1;
    s.omega[4] = checked::exact_div(5 * q - mix - 27, 64, "omega_4");
  } else {
    s.omega[0] = checked::exact_div(37 * q - mix - 27, 64, "omega_0");
    s.omega[1] = 1;
    s.omega[4] = checked::exact_div(5 * q - mix + 5, 64, "omega_4");
  }
  for (const auto& [i, w] : s.omega) {
    if (w < 0) throw InexactDivision("omega_" + std::to_string(i) + " is negative");
    if (w > 0) s.delta_uniformity = std::max(s.delta_uniformity, i);
  }
  return s;
}

Classification classify(const Field& field, std::uint64_t d, unsigned workers) {
  Classification c;
  c.is_permutation = std::gcd(d, std::uint64_t{field.q()} - 1) == 1;
  c.delta_uniformity = spectrum_brute(field, d, workers).delta_uniformity;
  c.is_apn = c.delta_uniformity == 2;
  return c;
}

std::uint32_t uniformity_bound(const Field& field) {
  if (field.p() == 3 && field.n() % 2 == 0) return 1;
  if (field.p() != 3 && field.q() % 4 == 1) return 3;
  return 4;
}

}  // namespace dspec
