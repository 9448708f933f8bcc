#pragma once

// Independent brute-force oracles for the prime-field case. Plain modular
// integers only; nothing here touches the library's tables or closed forms.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t pow_mod(std::int64_t b, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Extended Euclid.
inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = mod(a, p), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t t = r0 / r1;
    std::int64_t tmp = r0 - t * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - t * s1;
    s0 = s1;
    s1 = tmp;
  }
  return mod(s0, p);
}

inline std::set<std::int64_t> squares(std::int64_t p) {
  std::set<std::int64_t> s;
  for (std::int64_t x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

// Legendre symbol from an explicit square table.
class Legendre {
 public:
  explicit Legendre(std::int64_t p) : p_(p), sq_(squares(p)) {}
  int operator()(std::int64_t x) const {
    x = mod(x, p_);
    if (x == 0) return 0;
    return sq_.count(x) ? 1 : -1;
  }

 private:
  std::int64_t p_;
  std::set<std::int64_t> sq_;
};

inline std::int64_t eval(const std::vector<std::int64_t>& low_first, std::int64_t x, std::int64_t p) {
  std::int64_t v = 0;
  for (auto it = low_first.rbegin(); it != low_first.rend(); ++it) v = mod(v * x + *it, p);
  return v;
}

inline std::int64_t char_sum(const std::vector<std::int64_t>& f, std::int64_t p) {
  const Legendre chi(p);
  std::int64_t s = 0;
  for (std::int64_t x = 0; x < p; ++x) s += chi(eval(f, x, p));
  return s;
}

inline std::vector<std::int64_t> ddt_row(std::int64_t p, std::uint64_t d, std::int64_t a = 1) {
  std::vector<std::int64_t> h(p, 0);
  for (std::int64_t x = 0; x < p; ++x) ++h[mod(pow_mod(x + a, d, p) - pow_mod(x, d, p), p)];
  return h;
}

inline std::map<std::int64_t, std::int64_t> spectrum(std::int64_t p, std::uint64_t d) {
  std::map<std::int64_t, std::int64_t> om;
  for (const auto v : ddt_row(p, d)) ++om[v];
  return om;
}

// (y1, y2, y3) in (F_p^*)^3, triple loop, no elimination. Slot encoding
// as SignTriple::slot(): bit 2 for chi(y1) = -1, bit 1 for y2, bit 0 for y3.
inline std::array<std::int64_t, 8> quadratic_system(std::int64_t p) {
  const Legendre chi(p);
  std::array<std::int64_t, 8> out{};
  for (std::int64_t a = 1; a < p; ++a)
    for (std::int64_t b = 1; b < p; ++b)
      for (std::int64_t c = 1; c < p; ++c) {
        if (mod(a + b + c + 1, p) != 0) continue;
        if (mod(a * a + b * b + c * c + 1, p) != 0) continue;
        ++out[(chi(a) < 0 ? 4 : 0) | (chi(b) < 0 ? 2 : 0) | (chi(c) < 0 ? 1 : 0)];
      }
  return out;
}

inline std::int64_t d_system(std::int64_t p, std::uint64_t d) {
  std::int64_t n = 0;
  for (std::int64_t a = 1; a < p; ++a)
    for (std::int64_t b = 1; b < p; ++b)
      for (std::int64_t c = 1; c < p; ++c) {
        if (mod(a + b + c + 1, p) != 0) continue;
        if (mod(pow_mod(a, d, p) + pow_mod(b, d, p) + pow_mod(c, d, p) + 1, p) == 0) ++n;
      }
  return n;
}

// Solutions of x1 - x2 + x3 - x4 = 0, x1^d - x2^d + x3^d - x4^d = 0 in F_p^4.
inline std::int64_t four_variable(std::int64_t p, std::uint64_t d) {
  std::vector<std::int64_t> pw(p);
  for (std::int64_t x = 0; x < p; ++x) pw[x] = pow_mod(x, d, p);
  std::int64_t n = 0;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c) {
        const std::int64_t e = mod(a - b + c, p);
        if (mod(pw[a] - pw[b] + pw[c] - pw[e], p) == 0) ++n;
      }
  return n;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace oracle
