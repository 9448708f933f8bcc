#include "dspec/field.hpp"

#include <algorithm>
#include <string>

#include "dspec/errors.hpp"

namespace dspec {

namespace {

// Dense polynomials over F_p, low degree first, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(a * b % p);
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

// f mod g, g nonzero.
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() > dg) {
    const std::uint32_t c = mul_mod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - 1 - dg;
    if (c != 0) {
      for (std::size_t i = 0; i <= dg; ++i) {
        const std::uint32_t t = mul_mod(c, g[i], p);
        f[shift + i] = f[shift + i] >= t ? f[shift + i] - t : f[shift + i] + p - t;
      }
    }
    trim(f);
  }
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  return poly_rem(poly_mul(a, b, p), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  base = poly_rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
  trim(a);
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) {
      out.push_back(f);
      while (v % f == 0) v /= f;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

// Lexicographically smallest monic irreducible of degree n, comparing the
// constant term first.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t n) {
  if (n == 1) return {0, 1};
  std::vector<std::uint32_t> low(n, 0);  // c_0 .. c_{n-1}; c_0 is the most significant
  while (true) {
    std::vector<std::uint32_t> f = low;
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
    // Odometer with c_{n-1} changing fastest.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++low[i] < p) break;
      low[i] = 0;
      if (i == 0) throw Error("no irreducible polynomial found");  // impossible for prime p
    }
  }
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t f = 3; f * f <= v; f += 2) {
    if (v % f == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> decompose_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return std::pair{static_cast<std::uint32_t>(q), 1u};
  std::uint32_t n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), n};
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const auto n = static_cast<std::uint32_t>(f.size() - 1);
  if (n == 1) return true;
  const Poly x{0, 1};
  // x^(p^k) mod f for k = 0..n
  std::vector<Poly> frob{poly_rem(x, f, p)};
  for (std::uint32_t k = 1; k <= n; ++k) frob.push_back(poly_powmod(frob.back(), p, f, p));
  if (poly_sub(frob[n], frob[0], p) != Poly{}) return false;
  for (const auto r : prime_factors(n)) {
    const Poly g = poly_gcd(f, poly_sub(frob[n / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

struct Field::Impl {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::unique_ptr<const FieldTables> tables;
};

Field::Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Field Field::build(std::uint64_t p, std::uint32_t n, std::uint64_t size_cap) {
  if (p % 2 == 0) throw InvalidArgument("characteristic must be odd, got p = " + std::to_string(p));
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (n == 0) throw InvalidArgument("extension degree must be at least 1");
  const std::uint64_t cap = std::min(size_cap, kHardSizeLimit);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > cap) {
      throw InvalidArgument("field order " + std::to_string(p) + "^" + std::to_string(n) +
                            " exceeds the size cap " + std::to_string(cap));
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->p = static_cast<std::uint32_t>(p);
  impl->n = n;
  impl->q = static_cast<std::uint32_t>(q);
  impl->modulus = smallest_irreducible(impl->p, n);
  impl->tables = std::make_unique<const FieldTables>(Field(impl));
  return Field(std::move(impl));
}

std::uint32_t Field::p() const { return impl_->p; }
std::uint32_t Field::n() const { return impl_->n; }
std::uint32_t Field::q() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }
const FieldTables& Field::tables() const { return *impl_->tables; }

FieldElement Field::zero() const { return FieldElement{std::vector<std::uint32_t>(n(), 0)}; }

FieldElement Field::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElement Field::from_integer(std::int64_t v) const {
  const auto pp = static_cast<std::int64_t>(p());
  FieldElement e = zero();
  e.coeffs[0] = static_cast<std::uint32_t>(((v % pp) + pp) % pp);
  return e;
}

FieldElement Field::element(Index idx) const {
  if (idx >= q()) throw InvalidArgument("element index " + std::to_string(idx) + " out of range");
  FieldElement e = zero();
  for (std::uint32_t i = 0; i < n(); ++i) {
    e.coeffs[i] = idx % p();
    idx /= p();
  }
  return e;
}

Index Field::index(const FieldElement& x) const {
  if (x.coeffs.size() != n()) throw InvalidArgument("element has the wrong number of coefficients");
  Index idx = 0;
  for (std::uint32_t i = n(); i-- > 0;) {
    if (x.coeffs[i] >= p()) throw InvalidArgument("coefficient not reduced mod p");
    idx = idx * p() + x.coeffs[i];
  }
  return idx;
}

bool Field::is_zero(const FieldElement& x) const {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = zero();
  for (std::uint32_t i = 0; i < n(); ++i) {
    const std::uint32_t s = a.coeffs[i] + b.coeffs[i];
    r.coeffs[i] = s >= p() ? s - p() : s;
  }
  return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = zero();
  for (std::uint32_t i = 0; i < n(); ++i) {
    r.coeffs[i] = a.coeffs[i] >= b.coeffs[i] ? a.coeffs[i] - b.coeffs[i] : a.coeffs[i] + p() - b.coeffs[i];
  }
  return r;
}

FieldElement Field::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  Poly prod = poly_rem(poly_mul(a.coeffs, b.coeffs, p()), modulus(), p());
  prod.resize(n(), 0);
  return FieldElement{std::move(prod)};
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw InvalidArgument("inversion of zero");
  return pow(a, q() - 2);
}

CharValue Field::quadratic_character(const FieldElement& x) const {
  if (is_zero(x)) return CharValue(0);
  return pow(x, (q() - 1) / 2) == one() ? CharValue(1) : CharValue(-1);
}

std::optional<FieldElement> Field::sqrt(const FieldElement& x) const {
  if (q() % 4 != 3) {
    throw PreconditionError("square root via x^((q+1)/4) needs q = 3 mod 4, got q = " + std::to_string(q()));
  }
  if (quadratic_character(x) == CharValue(-1)) return std::nullopt;
  return pow(x, (std::uint64_t{q()} + 1) / 4);
}

// ---------------------------------------------------------------------------

FieldTables::FieldTables(const Field& field) : p_(field.p()), n_(field.n()), q_(field.q()) {
  place_.resize(n_);
  std::uint32_t pl = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    place_[i] = pl;
    pl *= p_;
  }
  if (n_ > 1) {
    digits_.resize(std::size_t{q_} * n_);
    for (Index x = 0; x < q_; ++x) {
      Index v = x;
      for (std::uint32_t i = 0; i < n_; ++i) {
        digits_[std::size_t{x} * n_ + i] = static_cast<std::uint16_t>(v % p_);
        v /= p_;
      }
    }
  }

  // Primitive element: smallest index whose order is q - 1.
  const std::uint32_t order = q_ - 1;
  const auto factors = prime_factors(order);
  Index g = 0;
  for (Index cand = 1; cand < q_; ++cand) {
    const FieldElement e = field.element(cand);
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) {
      return field.pow(e, order / r) != field.one();
    });
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw Error("no primitive element found");

  log_.assign(q_, 0);
  exp_.assign(2 * std::size_t{order}, 0);
  const FieldElement gen = field.element(g);
  FieldElement cur = field.one();
  for (std::uint32_t k = 0; k < order; ++k) {
    const Index idx = field.index(cur);
    exp_[k] = idx;
    exp_[k + order] = idx;
    log_[idx] = k;
    cur = field.mul(cur, gen);
  }

  chi_.assign(q_, 0);
  for (Index x = 1; x < q_; ++x) chi_[x] = (log_[x] % 2 == 0) ? 1 : -1;
}

Index FieldTables::add_digits(Index a, Index b) const {
  const std::uint16_t* da = &digits_[std::size_t{a} * n_];
  const std::uint16_t* db = &digits_[std::size_t{b} * n_];
  Index r = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t s = std::uint32_t{da[i]} + db[i];
    if (s >= p_) s -= p_;
    r += s * place_[i];
  }
  return r;
}

Index FieldTables::sub_digits(Index a, Index b) const {
  const std::uint16_t* da = &digits_[std::size_t{a} * n_];
  const std::uint16_t* db = &digits_[std::size_t{b} * n_];
  Index r = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint32_t s = da[i] >= db[i] ? std::uint32_t{da[i]} - db[i] : std::uint32_t{da[i]} + p_ - db[i];
    r += s * place_[i];
  }
  return r;
}

Index FieldTables::inv(Index a) const {
  if (a == 0) throw InvalidArgument("inversion of zero");
  const std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

Index FieldTables::from_integer(std::int64_t v) const {
  const auto pp = static_cast<std::int64_t>(p_);
  return static_cast<Index>(((v % pp) + pp) % pp);
}

std::vector<Index> FieldTables::power_table(std::uint64_t d) const {
  std::vector<Index> out(q_);
  out[0] = d == 0 ? 1 : 0;
  for (Index x = 1; x < q_; ++x) out[x] = pow(x, d);
  return out;
}

}  // namespace dspec
