// Exhaustive and randomized property checks over many fields. Runs on its
// own: ctest -L property, or the property_test binary directly.

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dspec/charsums.hpp"
#include "dspec/counts.hpp"
#include "dspec/report.hpp"
#include "dspec/spectrum.hpp"

namespace {

using dspec::Field;
using dspec::Index;

std::vector<Field> fields_up_to(std::uint64_t q_max) {
  std::vector<Field> out;
  for (std::uint64_t q = 3; q <= q_max; q += 2) {
    if (const auto pn = dspec::decompose_prime_power(q)) out.push_back(Field::build(pn->first, pn->second));
  }
  return out;
}

std::vector<Field> regime_fields_up_to(std::uint64_t q_max) {
  std::vector<Field> out;
  for (const auto& s : dspec::sweep_fields(q_max, false)) out.push_back(Field::build(s.p, s.n));
  return out;
}

TEST(Character, MultiplicativeOnSmallFields) {
  for (const Field& f : fields_up_to(200)) {
    const auto& t = f.tables();
    for (Index x = 0; x < f.q(); ++x)
      for (Index y = 0; y < f.q(); ++y) ASSERT_EQ(t.chi(t.mul(x, y)).value(), t.chi(x) * t.chi(y)) << f.q();
    // The table route must agree with exponentiation here too.
    for (Index x = 0; x < f.q(); ++x) ASSERT_EQ(t.chi(x), f.quadratic_character(f.element(x)));
  }
}

TEST(Character, SquaresAndNonsquaresBalance) {
  for (const Field& f : fields_up_to(3000)) {
    std::int64_t plus = 0;
    std::int64_t minus = 0;
    for (const auto c : f.tables().chi_table()) {
      if (c > 0) ++plus;
      if (c < 0) ++minus;
    }
    EXPECT_EQ(plus, (f.q() - 1) / 2);
    EXPECT_EQ(minus, (f.q() - 1) / 2);
  }
}

TEST(Character, MinusOneIsNonsquareExactlyWhenThreeModFour) {
  for (const Field& f : fields_up_to(3000)) {
    EXPECT_EQ(f.quadratic_character(f.from_integer(-1)) == dspec::CharValue(-1), f.q() % 4 == 3) << f.q();
  }
}

TEST(SquareRoot, SquaresMapToRoots) {
  for (const Field& f : fields_up_to(1500)) {
    if (f.q() % 4 != 3) continue;
    for (Index x = 0; x < f.q(); ++x) {
      const auto e = f.element(x);
      const auto r = f.sqrt(e);
      if (f.quadratic_character(e) == dspec::CharValue(-1)) {
        ASSERT_FALSE(r.has_value());
      } else {
        ASSERT_TRUE(r.has_value());
        ASSERT_EQ(f.mul(*r, *r), e) << f.q() << " x = " << x;
      }
    }
  }
}

TEST(Modulus, IrreducibleAndRootFree) {
  for (const Field& f : fields_up_to(20000)) {
    if (f.n() == 1) continue;
    EXPECT_TRUE(dspec::is_irreducible(f.p(), f.modulus()));
    for (std::uint64_t r = 0; r < f.p(); ++r) {
      std::uint64_t v = 0;
      for (auto it = f.modulus().rbegin(); it != f.modulus().rend(); ++it) v = (v * r + *it) % f.p();
      EXPECT_NE(v, 0u) << f.p() << "^" << f.n() << " root " << r;
    }
  }
}

TEST(DdtRow, MassIsQForAnyExponent) {
  std::mt19937_64 rng(3);
  for (const Field& f : fields_up_to(800)) {
    for (int s = 0; s < 3; ++s) {
      const std::uint64_t d = s == 0 ? dspec::default_exponent(f.q()) : 1 + rng() % (2 * f.q());
      const auto row = dspec::ddt_row(f, d);
      EXPECT_EQ(std::accumulate(row.begin(), row.end(), std::int64_t{0}), f.q()) << f.q() << " d = " << d;
    }
  }
}

TEST(DdtRow, EvenOffChiTwoOverTwo) {
  for (const Field& f : regime_fields_up_to(2500)) {
    const auto row = dspec::ddt_row(f, dspec::default_exponent(f.q()));
    const auto& t = f.tables();
    const Index half = t.mul(t.from_integer(f.quadratic_character(f.from_integer(2))), t.inv(t.from_integer(2)));
    for (Index b = 0; b < f.q(); ++b) {
      if (b != half) ASSERT_EQ(row[b] % 2, 0) << f.q() << " b = " << b;
    }
  }
  // p = 3 fields with q = 3 mod 4 as well.
  for (const std::uint32_t n : {1u, 3u, 5u}) {
    const Field f = Field::build(3, n);
    const auto row = dspec::ddt_row(f, dspec::default_exponent(f.q()));
    const auto& t = f.tables();
    const Index half = t.mul(t.from_integer(f.quadratic_character(f.from_integer(2))), t.inv(t.from_integer(2)));
    for (Index b = 0; b < f.q(); ++b) {
      if (b != half) ASSERT_EQ(row[b] % 2, 0) << f.q() << " b = " << b;
    }
  }
}

TEST(Permutation, GcdCriterion) {
  for (const Field& f : fields_up_to(400)) {
    const std::uint64_t d = dspec::default_exponent(f.q());
    const auto pw = f.tables().power_table(d);
    std::vector<bool> hit(f.q(), false);
    for (const Index v : pw) hit[v] = true;
    const bool bijective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    EXPECT_EQ(bijective, std::gcd(d, std::uint64_t{f.q()} - 1) == 1) << f.q();
    if (f.q() % 4 == 3) EXPECT_TRUE(bijective) << f.q();
  }
}

TEST(QuadraticSystem, SumRuleOnBruteCounts) {
  for (const Field& f : regime_fields_up_to(2500)) {
    const auto c = dspec::count_quadratic_system_brute(f);
    const int chi_neg3 = f.quadratic_character(f.from_integer(-3));
    ASSERT_EQ(c.weighted_representatives(), static_cast<std::int64_t>(f.q()) - 3 - 4 * chi_neg3) << f.q();
  }
}

TEST(Spectrum, MomentIdentitiesForArbitraryExponents) {
  std::mt19937_64 rng(11);
  for (const Field& f : fields_up_to(500)) {
    for (int s = 0; s < 2; ++s) {
      const std::uint64_t d = 2 + rng() % (f.q() + 5);
      const auto sp = dspec::spectrum_brute(f, d);
      const std::int64_t q = f.q();
      ASSERT_EQ(sp.total(), q);
      ASSERT_EQ(sp.first_moment(), q);
      const std::int64_t N4 = dspec::n4_direct(f, d);
      ASSERT_EQ(N4, dspec::n4_ddt_oracle(f, d));
      ASSERT_EQ((N4 - q * q) % (q - 1), 0);
      ASSERT_EQ(sp.second_moment(), (N4 - q * q) / (q - 1)) << q << " d = " << d;
    }
  }
}

TEST(Spectrum, UniformityBoundTable) {
  for (const Field& f : fields_up_to(2500)) {
    const auto sp = dspec::spectrum_brute(f, dspec::default_exponent(f.q()));
    EXPECT_LE(sp.delta_uniformity, dspec::uniformity_bound(f)) << f.q();
  }
  EXPECT_EQ(dspec::spectrum_brute(Field::build(3, 2), 6).delta_uniformity, 1u);
  EXPECT_EQ(dspec::spectrum_brute(Field::build(3, 4), 42).delta_uniformity, 1u);
}

TEST(Spectrum, OmegaFourPositiveBeyondEleven) {
  for (const Field& f : regime_fields_up_to(2500)) {
    if (f.q() == 11) continue;
    EXPECT_GE(dspec::spectrum_brute(f, dspec::default_exponent(f.q())).at(4), 1) << f.q();
  }
}

TEST(CharSums, WeilBoundAndMethodAgreement) {
  for (const Field& f : fields_up_to(2500)) {
    if (f.p() == 3) continue;
    const auto e = dspec::lambda_sums_enumerated(f);
    const auto r = dspec::lambda_sums_recurrence(f.p(), f.n());
    EXPECT_EQ(e.lambda1, r.lambda1) << f.q();
    EXPECT_EQ(e.lambda2, r.lambda2) << f.q();
    EXPECT_TRUE(dspec::within_weil_bound(e.lambda1, f.q()));
    EXPECT_TRUE(dspec::within_weil_bound(e.lambda2, f.q()));
  }
}

TEST(CharSums, SixSumsAcrossRegime) {
  for (const Field& f : regime_fields_up_to(2500)) EXPECT_TRUE(dspec::six_sums(f).agree()) << f.q();
}

TEST(CharSums, QuadraticClosedFormOnRandomTriples) {
  std::mt19937_64 rng(5);
  for (const Field& f : fields_up_to(400)) {
    std::uniform_int_distribution<Index> pick(0, f.q() - 1);
    for (int s = 0; s < 100; ++s) {
      const auto a2 = f.element(1 + pick(rng) % (f.q() - 1));
      const auto a1 = f.element(pick(rng));
      const auto a0 = f.element(pick(rng));
      ASSERT_EQ(dspec::quadratic_sum_closed(a2, a1, a0, f), dspec::char_sum(dspec::Polynomial{a0, a1, a2}, f));
    }
  }
}

TEST(Counts, ClosedEqualsBruteAcrossRegime) {
  for (const Field& f : regime_fields_up_to(2500)) {
    const auto s = dspec::lambda_sums_enumerated(f);
    const auto chi_neg3 = f.quadratic_character(f.from_integer(-3));
    const std::int64_t q = f.q();
    const std::uint64_t d = dspec::default_exponent(f.q());
    ASSERT_EQ(dspec::count_quadratic_system_brute(f),
              dspec::count_quadratic_system_closed(q, s.lambda1, s.lambda2, chi_neg3))
        << q;
    ASSERT_EQ(dspec::count_d_system_brute(f, d).total, dspec::count_d_system_closed(q, s.lambda1, s.lambda2, chi_neg3))
        << q;
    ASSERT_EQ(dspec::n4_ddt_oracle(f, d), dspec::N4_closed(q, s.lambda1, s.lambda2)) << q;
  }
}

}  // namespace
