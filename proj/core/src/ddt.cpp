#include "dspec/ddt.hpp"

#include <random>
#include <string>

#include "dspec/errors.hpp"
#include "dspec/parallel.hpp"

namespace dspec {

void Budget::require(std::uint64_t q, const std::string& what) const {
  if (!allows(q)) {
    throw BudgetExceeded(what + " is O(q^2); q = " + std::to_string(q) + " exceeds the budget " +
                         std::to_string(max_q) + " (force to override)");
  }
}

DdtRow ddt_row(const Field& field, std::uint64_t d, unsigned workers) {
  const FieldTables& t = field.tables();
  const auto pw = t.power_table(d);
  return parallel_reduce<DdtRow>(
      0, t.q(), workers,
      [&](std::uint64_t lo, std::uint64_t hi, DdtRow& hist) {
        hist.assign(t.q(), 0);
        for (auto x = static_cast<Index>(lo); x < hi; ++x) ++hist[t.sub(pw[t.add(x, 1)], pw[x])];
      },
      merge_histograms<std::int64_t>);
}

DdtRow ddt_row_direct(const Field& field, std::uint64_t d, Index a) {
  DdtRow hist(field.q(), 0);
  const FieldElement ea = field.element(a);
  for (const FieldElement& x : field.enumerate()) {
    ++hist[field.index(field.sub(field.pow(field.add(x, ea), d), field.pow(x, d)))];
  }
  return hist;
}

Ddt::Ddt(Field field, std::uint64_t d, DdtRow row_one)
    : field_(std::move(field)), d_(d), row_one_(std::move(row_one)), inv_scale_(field_.q(), 0) {
  const FieldTables& t = field_.tables();
  for (Index a = 1; a < t.q(); ++a) inv_scale_[a] = t.inv(t.pow(a, d_));
}

std::int64_t Ddt::at(Index a, Index b) const {
  if (a == 0) return b == 0 ? field_.q() : 0;
  return row_one_[field_.tables().mul(b, inv_scale_[a])];
}

DdtRow Ddt::row(Index a) const {
  DdtRow out(field_.q());
  for (Index b = 0; b < field_.q(); ++b) out[b] = at(a, b);
  return out;
}

Ddt full_ddt(const Field& field, std::uint64_t d, const Budget& budget, unsigned workers) {
  budget.require(field.q(), "full DDT");
  Ddt table(field, d, ddt_row(field, d, workers));
  if (field.q() > 2) {
    std::mt19937_64 rng(0xddull * field.q() + d);
    std::uniform_int_distribution<Index> pick(2, field.q() - 1);
    for (int r = 0; r < 3; ++r) {
      const Index a = pick(rng);
      if (table.row(a) != ddt_row_direct(field, d, a)) {
        throw Error("row scaling disagrees with the definition at a = " + std::to_string(a));
      }
    }
  }
  return table;
}

}  // namespace dspec
