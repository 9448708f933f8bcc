#include "dspec/charsums.hpp"

#include <algorithm>
#include <string>

#include "dspec/checked.hpp"
#include "dspec/errors.hpp"
#include "dspec/parallel.hpp"

namespace dspec {

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked::add(out[i + j], checked::mul(a[i], b[j]));
  }
  return out;
}

Polynomial embed(const Field& field, const IntPolynomial& f) {
  Polynomial out;
  out.reserve(f.size());
  for (const auto c : f) out.push_back(field.from_integer(c));
  return out;
}

std::int64_t char_sum(const Polynomial& f, const Field& field, unsigned workers) {
  if (std::all_of(f.begin(), f.end(), [&](const FieldElement& c) { return field.is_zero(c); })) {
    throw InvalidArgument("character sum of the zero polynomial");
  }
  const FieldTables& t = field.tables();
  std::vector<Index> coeffs;
  coeffs.reserve(f.size());
  for (const auto& c : f) coeffs.push_back(field.index(c));

  return parallel_reduce<std::int64_t>(
      0, field.q(), workers,
      [&](std::uint64_t lo, std::uint64_t hi, std::int64_t& acc) {
        for (auto x = static_cast<Index>(lo); x < hi; ++x) {
          Index v = 0;
          for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = t.add(t.mul(v, x), *it);
          acc += t.chi(v);
        }
      },
      [](std::int64_t& acc, std::int64_t part) { acc += part; });
}

std::int64_t char_sum(const IntPolynomial& f, const Field& field, unsigned workers) {
  return char_sum(embed(field, f), field, workers);
}

std::int64_t quadratic_sum_closed(const FieldElement& a2, const FieldElement& a1, const FieldElement& a0,
                                  const Field& field) {
  if (field.is_zero(a2)) throw InvalidArgument("leading coefficient of the quadratic is zero");
  const FieldElement disc = field.sub(field.mul(a1, a1), field.mul(field.from_integer(4), field.mul(a0, a2)));
  const int c = field.quadratic_character(a2);
  if (!field.is_zero(disc)) return -c;
  return (static_cast<std::int64_t>(field.q()) - 1) * c;
}

IntPolynomial lambda1_cubic() { return multiply(multiply({0, 1}, {1, 1}), {-3, 1}); }
IntPolynomial lambda2_cubic() { return multiply(multiply({0, 1}, {1, 1}), {-2, 1}); }

std::string_view to_string(SumMethod m) {
  return m == SumMethod::enumerated ? "enumerated" : "recurrence";
}

bool within_weil_bound(std::int64_t sum, std::uint64_t q) {
  const std::int64_t bound = checked::mul(4, static_cast<std::int64_t>(q));
  if (sum > bound || -sum > bound) return false;
  return checked::mul(sum, sum) <= bound;
}

CharSums lambda_sums_enumerated(const Field& field, unsigned workers) {
  return CharSums{char_sum(lambda1_cubic(), field, workers), char_sum(lambda2_cubic(), field, workers),
                  SumMethod::enumerated};
}

std::int64_t gamma_recurrence(GammaSeed seed, std::uint32_t n) {
  if (n == 0) throw InvalidArgument("recurrence degree must be at least 1");
  if (!within_weil_bound(seed.gamma1, seed.p)) {
    throw InvalidArgument("seed gamma1 = " + std::to_string(seed.gamma1) + " violates |gamma1| <= 2 sqrt(" +
                          std::to_string(seed.p) + ")");
  }
  const auto p = static_cast<std::int64_t>(seed.p);
  std::int64_t prev = 2;              // s_0
  std::int64_t cur = -seed.gamma1;    // s_1
  for (std::uint32_t k = 2; k <= n; ++k) {
    const std::int64_t next = checked::sub(checked::mul(-seed.gamma1, cur), checked::mul(p, prev));
    prev = cur;
    cur = next;
  }
  return -cur;
}

CharSums lambda_sums_recurrence(std::uint32_t p, std::uint32_t n) {
  if (p == 3) {
    throw PreconditionError("the cubics x(x+1)(x-3) and x(x+1)(x-2) are singular in characteristic 3");
  }
  const Field prime_field = Field::build(p, 1, std::max<std::uint64_t>(p, kDefaultSizeCap));
  const GammaSeed s1{p, char_sum(lambda1_cubic(), prime_field)};
  const GammaSeed s2{p, char_sum(lambda2_cubic(), prime_field)};
  return CharSums{gamma_recurrence(s1, n), gamma_recurrence(s2, n), SumMethod::recurrence};
}

bool SixSums::agree() const {
  for (std::size_t i = 0; i < count; ++i) {
    if (enumerated[i] != closed[i]) return false;
  }
  return true;
}

std::string_view SixSums::polynomial_name(std::size_t item) {
  static constexpr std::array<std::string_view, 6> names{
      "x(x^2+x+1)",        "(x+1)(x^2+x+1)",        "(x^2+x)(x^2+x+1)",
      "x(3x^2+2x+3)",      "(x^2+x+1)(3x^2+2x+3)",  "x(x^2+x+1)(3x^2+2x+3)",
  };
  return names.at(item);
}

std::array<IntPolynomial, 6> six_sum_polynomials() {
  const IntPolynomial x{0, 1};
  const IntPolynomial x1{1, 1};
  const IntPolynomial t{1, 1, 1};  // x^2 + x + 1
  const IntPolynomial s{3, 2, 3};  // 3x^2 + 2x + 3
  return {multiply(x, t), multiply(x1, t), multiply(multiply(x, x1), t),
          multiply(x, s), multiply(t, s),  multiply(multiply(x, t), s)};
}

SixSums six_sums(const Field& field, SixSumsScope scope, unsigned workers) {
  if (field.q() % 4 != 3) {
    throw PreconditionError("the six-sum identities need q = 3 mod 4, got q = " + std::to_string(field.q()));
  }
  if (field.p() == 3 && scope == SixSumsScope::all) {
    throw PreconditionError("items 4-6 of the six-sum identities are undefined for p = 3");
  }
  SixSums out;
  out.count = scope == SixSumsScope::all ? 6 : 3;
  const auto polys = six_sum_polynomials();
  for (std::size_t i = 0; i < out.count; ++i) out.enumerated[i] = char_sum(polys[i], field, workers);

  const std::int64_t l1 = char_sum(lambda1_cubic(), field, workers);
  out.closed[0] = l1;
  out.closed[1] = -l1;
  out.closed[2] = -l1 - 1;
  if (out.count == 6) {
    const std::int64_t l2 = char_sum(lambda2_cubic(), field, workers);
    out.closed[3] = l2;
    out.closed[4] = l2 - field.tables().chi(field.tables().from_integer(3));
    out.closed[5] = -2 * l1;
  }
  return out;
}

}  // namespace dspec
