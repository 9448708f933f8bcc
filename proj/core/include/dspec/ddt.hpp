#pragma once

// Difference distribution tables of power maps F(x) = x^d:
//   delta(a, b) = #{x in F_q : (x + a)^d - x^d = b}.
// For a != 0, delta(a, b) = delta(1, b / a^d), so row a = 1 determines
// the whole table.

#include <cstdint>
#include <vector>

#include "dspec/budget.hpp"
#include "dspec/field.hpp"

namespace dspec {

// Indexed by the element index of b.
using DdtRow = std::vector<std::int64_t>;

// Histogram of (x + 1)^d - x^d over all x.
DdtRow ddt_row(const Field& field, std::uint64_t d, unsigned workers = 1);

// Row a straight from the definition, O(q).
DdtRow ddt_row_direct(const Field& field, std::uint64_t d, Index a);

class Ddt {
 public:
  Ddt(Field field, std::uint64_t d, DdtRow row_one);

  std::uint32_t q() const { return field_.q(); }
  std::uint64_t exponent() const { return d_; }
  const DdtRow& row_one() const { return row_one_; }

  std::int64_t at(Index a, Index b) const;
  DdtRow row(Index a) const;

 private:
  Field field_;
  std::uint64_t d_;
  DdtRow row_one_;
  std::vector<Index> inv_scale_;  // a -> a^(-d), a != 0
};

// Every row via the scaling identity; three pseudo-random rows are
// recomputed from the definition and compared (Error on mismatch).
// Throws BudgetExceeded when q exceeds the O(q^2) budget.
Ddt full_ddt(const Field& field, std::uint64_t d, const Budget& budget = {}, unsigned workers = 1);

}  // namespace dspec
