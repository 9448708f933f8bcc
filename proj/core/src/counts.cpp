#include "dspec/counts.hpp"

#include <random>

#include "dspec/checked.hpp"
#include "dspec/ddt.hpp"
#include "dspec/errors.hpp"
#include "dspec/parallel.hpp"

namespace dspec {


std::string SignTriple::label() const {
  auto s = [](int v) { return v > 0 ? std::string("1") : std::string("-1"); };
  return "(" + s(i) + "," + s(j) + "," + s(k) + ")";
}

std::int64_t SignCounts::total() const {
  std::int64_t t = 0;
  for (const auto c : counts_) t = checked::add(t, c);
  return t;
}

std::int64_t SignCounts::weighted_representatives() const {
  return (*this)[{1, 1, 1}] + 4 * (*this)[{1, 1, -1}] + 3 * (*this)[{1, -1, -1}];
}

void require_regime(const Field& field, const std::string& what) {
  if (field.q() % 4 != 3 || field.p() == 3) {
    throw PreconditionError(what + " requires q = 3 mod 4 and p != 3, got q = " + std::to_string(field.q()));
  }
}

SignCounts count_quadratic_system_brute(const Field& field, const Budget& budget, unsigned workers) {
  require_regime(field, "quadratic system count");
  budget.require(field.q(), "quadratic system count");
  const FieldTables& t = field.tables();
  const Index q = t.q();
  const Index minus_one = t.neg(1);

  std::vector<Index> sq(q);
  for (Index y = 0; y < q; ++y) sq[y] = t.square(y);

  using Partial = std::array<std::int64_t, 8>;
  const Partial buckets = parallel_reduce<Partial>(
      1, q, workers,
      [&](std::uint64_t lo, std::uint64_t hi, Partial& acc) {
        for (auto y1 = static_cast<Index>(lo); y1 < hi; ++y1) {
          const Index c = t.sub(minus_one, y1);         // y2 + y3 = c
          const Index target = t.sub(minus_one, sq[y1]);  // y2^2 + y3^2 = target
          const std::size_t s1 = t.chi(y1) < 0 ? 4 : 0;
          for (Index y2 = 1; y2 < q; ++y2) {
            const Index y3 = t.sub(c, y2);
            if (y3 == 0) continue;
            if (t.add(sq[y2], sq[y3]) != target) continue;
            ++acc[s1 | (t.chi(y2) < 0 ? 2 : 0) | (t.chi(y3) < 0 ? 1 : 0)];
          }
        }
      },
      [](Partial& acc, const Partial& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });

  SignCounts out;
  for (std::size_t s = 0; s < 8; ++s) out.slot(s) = buckets[s];
  return out;
}

SignCounts count_quadratic_system_closed(std::int64_t q, std::int64_t lambda1, std::int64_t lambda2,
                                         CharValue chi_neg3) {
  const int c = chi_neg3;
  const std::int64_t n1 = checked::exact_div(q + 3 * lambda1 - 6 * lambda2 - 15 - 16 * c, 8, "N(1,1,1)");
  const std::int64_t n2 = checked::exact_div(q - 3 * lambda1 - 3 - 4 * c, 8, "N(1,1,-1)");
  const std::int64_t n3 = checked::exact_div(q + 3 * lambda1 + 2 * lambda2 + 1, 8, "N(1,-1,-1)");
  SignCounts out;
  for (std::size_t s = 0; s < 8; ++s) {
    const auto t = SignTriple::from_slot(s);
    const int negatives = (t.i < 0) + (t.j < 0) + (t.k < 0);
    out.slot(s) = negatives == 0 ? n1 : (negatives == 2 ? n3 : n2);
  }
  return out;
}

DSystemCounts count_d_system_brute(const Field& field, std::uint64_t d, const Budget& budget, unsigned workers) {
  budget.require(field.q(), "d-system count");
  const FieldTables& t = field.tables();
  const Index q = t.q();
  const Index minus_one = t.neg(1);

  std::vector<Index> pw;
  if (q % 4 == 3 && d == (std::uint64_t{q} + 3) / 2) {
    pw.resize(q);
    pw[0] = 0;
    for (Index y = 1; y < q; ++y) pw[y] = t.chi(y) > 0 ? t.square(y) : t.neg(t.square(y));
    std::mt19937_64 rng(0x5eed'0000'0000'0000ull + q);
    std::uniform_int_distribution<Index> pick(0, q - 1);
    for (int s = 0; s < 100; ++s) {
      const Index y = pick(rng);
      if (field.index(field.pow(field.element(y), d)) != pw[y]) {
        throw Error("chi(y) y^2 shortcut disagrees with square-and-multiply at index " + std::to_string(y));
      }
    }
  } else {
    pw = t.power_table(d);
  }

  using Partial = std::array<std::int64_t, 8>;
  const Partial buckets = parallel_reduce<Partial>(
      1, q, workers,
      [&](std::uint64_t lo, std::uint64_t hi, Partial& acc) {
        for (auto y1 = static_cast<Index>(lo); y1 < hi; ++y1) {
          const Index c = t.sub(minus_one, y1);
          const Index target = t.sub(minus_one, pw[y1]);
          const std::size_t s1 = t.chi(y1) < 0 ? 4 : 0;
          for (Index y2 = 1; y2 < q; ++y2) {
            const Index y3 = t.sub(c, y2);
            if (y3 == 0) continue;
            if (t.add(pw[y2], pw[y3]) != target) continue;
            ++acc[s1 | (t.chi(y2) < 0 ? 2 : 0) | (t.chi(y3) < 0 ? 1 : 0)];
          }
        }
      },
      [](Partial& acc, const Partial& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });

  DSystemCounts out;
  for (std::size_t s = 0; s < 8; ++s) out.by_sign.slot(s) = buckets[s];
  out.total = out.by_sign.total();
  return out;
}

std::int64_t count_d_system_closed(std::int64_t q, std::int64_t lambda1, std::int64_t lambda2,
                                   CharValue chi_neg3) {
  const int c = chi_neg3;
  return checked::exact_div(29 * q - 9 * lambda1 - 6 * lambda2 - 75 - 32 * c, 8, "n4");
}

std::int64_t n4_ddt_oracle(const Field& field, std::uint64_t d, unsigned workers) {
  const FieldTables& t = field.tables();
  const auto hist = ddt_row(field, d, workers);
  std::int64_t squares = 0;
  for (const auto h : hist) squares = checked::add(squares, checked::mul(h, h));
  const std::int64_t q = t.q();
  return checked::add(checked::mul(q, q), checked::mul(q - 1, squares));
}

std::int64_t n4_direct(const Field& field, std::uint64_t d, const Budget& budget, unsigned workers) {
  budget.require(field.q(), "direct N4 oracle");
  const FieldTables& t = field.tables();
  const Index q = t.q();
  const auto pw = t.power_table(d);

  struct Partial {
    std::int64_t sum = 0;
    std::vector<std::int64_t> hist;
  };
  const Partial total = parallel_reduce<Partial>(
      0, q, workers,
      [&](std::uint64_t lo, std::uint64_t hi, Partial& acc) {
        acc.hist.assign(q, 0);
        for (auto a = static_cast<Index>(lo); a < hi; ++a) {
          std::fill(acc.hist.begin(), acc.hist.end(), 0);
          for (Index x = 0; x < q; ++x) ++acc.hist[t.sub(pw[t.add(x, a)], pw[x])];
          for (const auto h : acc.hist) acc.sum = checked::add(acc.sum, h * h);
        }
      },
      [](Partial& acc, const Partial& part) { acc.sum = checked::add(acc.sum, part.sum); });
  return total.sum;
}

std::int64_t N4_closed(std::int64_t q, std::int64_t lambda1, std::int64_t lambda2) {
  const std::int64_t inner = checked::sub(checked::mul(29, q), 9 * lambda1 + 6 * lambda2 - 5);
  return checked::add(1, checked::exact_div(checked::mul(q - 1, inner), 8, "N4"));
}

std::int64_t N4_decomposition(std::int64_t q, CharValue chi_neg3, std::int64_t n4) {
  const int c = chi_neg3;
  return checked::add(checked::add(1, checked::mul(10 + 4 * c, q - 1)), checked::mul(n4, q - 1));
}

}  // namespace dspec
