#pragma once

// One-stop verification of a power map x^d over F_q: brute spectrum,
// character sums, solution counts and, in the regime q = 3 mod 4, p != 3,
// d = (q+3)/2, every closed form checked against its oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dspec/budget.hpp"
#include "dspec/charsums.hpp"
#include "dspec/counts.hpp"
#include "dspec/spectrum.hpp"

namespace dspec {

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct ReportOptions {
  Budget budget;
  unsigned workers = 1;
};

struct BruteCounts {
  std::optional<SignCounts> n_ijk;       // quadratic system, regime and budget only
  std::optional<DSystemCounts> d_system; // budget only
  std::int64_t N4_ddt = 0;               // row-scaled DDT oracle, always
  std::optional<std::int64_t> N4_direct; // every row from the definition, budget only
};

struct ClosedCounts {
  SignCounts n_ijk;
  std::int64_t n4 = 0;
  std::int64_t N4 = 0;
};

struct SpectrumReport {
  Field field;
  std::uint64_t d = 0;
  DifferentialSpectrum brute;
  std::optional<DifferentialSpectrum> closed;
  CharSums char_sums;                  // enumerated
  std::optional<CharSums> recurrence;  // p != 3
  std::optional<SixSums> six_sums;     // q = 3 mod 4
  std::optional<BranchCondition> branch;
  BruteCounts counts;
  std::optional<ClosedCounts> closed_counts;
  std::vector<IdentityCheck> checks;
  std::vector<std::string> skipped;  // oracles not run, with the reason
  bool is_permutation = false;
  bool is_apn = false;

  bool all_pass() const;
  std::size_t failures() const;
};

// Runs every applicable check. Failed checks and closed forms that do not
// divide exactly are recorded in `checks`; nothing is thrown for them.
SpectrumReport make_report(const Field& field, std::uint64_t d, const ReportOptions& options = {});

struct SweepField {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
};

// Odd prime powers 7 <= q <= q_max in ascending order. Without
// include_out_of_regime only q = 3 mod 4 with p != 3 are kept.
// Throws InvalidArgument when q_max exceeds size_cap.
std::vector<SweepField> sweep_fields(std::uint64_t q_max, bool include_out_of_regime,
                                     std::uint64_t size_cap = kDefaultSizeCap);

// make_report at d = (q+3)/2 for every sweep field. options.workers fields
// run concurrently, each single-threaded; results stay in sweep order.
std::vector<SpectrumReport> verify_sweep(std::uint64_t q_max, bool include_out_of_regime,
                                         const ReportOptions& options = {},
                                         std::uint64_t size_cap = kDefaultSizeCap);

}  // namespace dspec
