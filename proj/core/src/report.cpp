#include "dspec/report.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <mutex>
#include <thread>

#include "dspec/checked.hpp"
#include "dspec/errors.hpp"

namespace dspec {

namespace {

class CheckList {
 public:
  explicit CheckList(std::vector<IdentityCheck>& out) : out_(out) {}

  void eq(std::string name, std::int64_t lhs, std::int64_t rhs) { out_.push_back({std::move(name), lhs == rhs, lhs, rhs}); }
  void le(std::string name, std::int64_t lhs, std::int64_t rhs) { out_.push_back({std::move(name), lhs <= rhs, lhs, rhs}); }
  void ge(std::string name, std::int64_t lhs, std::int64_t rhs) { out_.push_back({std::move(name), lhs >= rhs, lhs, rhs}); }
  void fail(std::string name) { out_.push_back({std::move(name), false, 0, 0}); }

 private:
  std::vector<IdentityCheck>& out_;
};

void weil_checks(CheckList& c, const CharSums& s, std::uint64_t q) {
  const std::string tag(to_string(s.method));
  const std::int64_t bound = 4 * static_cast<std::int64_t>(q);
  c.le("weil.lambda1." + tag + " (lambda^2 <= 4q)", s.lambda1 * s.lambda1, bound);
  c.le("weil.lambda2." + tag + " (lambda^2 <= 4q)", s.lambda2 * s.lambda2, bound);
}

}  // namespace

bool SpectrumReport::all_pass() const { return failures() == 0; }

std::size_t SpectrumReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

SpectrumReport make_report(const Field& field, std::uint64_t d, const ReportOptions& options) {
  const unsigned workers = options.workers;
  const std::int64_t q = field.q();
  const bool regime = in_closed_regime(field, d);
  const bool budget_ok = options.budget.allows(field.q());

  const DdtRow row = ddt_row(field, d, workers);
  SpectrumReport r{.field = field, .d = d, .brute = spectrum_from_row(field.q(), d, row)};
  CheckList c(r.checks);

  r.is_permutation = std::gcd(d, std::uint64_t{field.q()} - 1) == 1;
  r.is_apn = r.brute.delta_uniformity == 2;

  c.eq("spectrum.sum_omega", r.brute.total(), q);
  c.eq("spectrum.sum_i_omega", r.brute.first_moment(), q);

  std::int64_t row_squares = 0;
  for (const auto v : row) row_squares += v * v;
  r.counts.N4_ddt = checked::add(q * q, checked::mul(q - 1, row_squares));
  if (budget_ok) {
    r.counts.N4_direct = n4_direct(field, d, options.budget, workers);
    c.eq("N4.direct_vs_row_scaled", *r.counts.N4_direct, r.counts.N4_ddt);
  } else {
    r.skipped.push_back("direct N4 oracle (q exceeds the O(q^2) budget)");
  }
  {
    const std::int64_t n4_value = r.counts.N4_direct.value_or(r.counts.N4_ddt);
    const std::int64_t num = n4_value - q * q;
    if (num % (q - 1) == 0) {
      c.eq("spectrum.second_moment_vs_N4", r.brute.second_moment(), num / (q - 1));
    } else {
      c.fail("spectrum.second_moment_vs_N4 (N4 - q^2 not divisible by q - 1)");
    }
  }

  if (d == default_exponent(field.q())) {
    c.le("uniformity.bound", r.brute.delta_uniformity, uniformity_bound(field));
  }

  r.char_sums = lambda_sums_enumerated(field, workers);
  if (field.p() != 3) {
    r.recurrence = lambda_sums_recurrence(field.p(), field.n());
    weil_checks(c, r.char_sums, field.q());
    weil_checks(c, *r.recurrence, field.q());
    c.eq("charsums.lambda1.enumerated_vs_recurrence", r.char_sums.lambda1, r.recurrence->lambda1);
    c.eq("charsums.lambda2.enumerated_vs_recurrence", r.char_sums.lambda2, r.recurrence->lambda2);
  }

  if (budget_ok) {
    r.counts.d_system = count_d_system_brute(field, d, options.budget, workers);
  } else {
    r.skipped.push_back("d-system brute count (q exceeds the O(q^2) budget)");
  }

  if (!regime) return r;

  // ---- closed-form regime ----
  c.eq("permutation.gcd(d,q-1)", std::gcd(d, std::uint64_t{field.q()} - 1), 1);

  r.six_sums = six_sums(field, SixSumsScope::all, workers);
  for (std::size_t i = 0; i < r.six_sums->count; ++i) {
    c.eq("six_sums.item" + std::to_string(i + 1) + " " + std::string(SixSums::polynomial_name(i)),
         r.six_sums->enumerated[i], r.six_sums->closed[i]);
  }

  r.branch = branch_condition(field);
  const CharValue chi_neg3 = r.branch->chi_neg3;
  const std::int64_t l1 = r.char_sums.lambda1;
  const std::int64_t l2 = r.char_sums.lambda2;

  try {
    ClosedCounts cc;
    cc.n_ijk = count_quadratic_system_closed(q, l1, l2, chi_neg3);
    cc.n4 = count_d_system_closed(q, l1, l2, chi_neg3);
    cc.N4 = N4_closed(q, l1, l2);
    r.closed_counts = cc;
  } catch (const InexactDivision& e) {
    c.fail(std::string("closed counts divide exactly: ") + e.what());
  }

  if (budget_ok) {
    r.counts.n_ijk = count_quadratic_system_brute(field, options.budget, workers);
    const SignCounts& b = *r.counts.n_ijk;
    if (r.closed_counts) {
      for (std::size_t s = 0; s < 8; ++s) {
        c.eq("quadratic_system.N" + SignTriple::from_slot(s).label(), b.slot(s), r.closed_counts->n_ijk.slot(s));
      }
    }
    const std::int64_t sum_rule = q - 3 - 4 * chi_neg3;
    c.eq("quadratic_system.N1+4N2+3N3", b.weighted_representatives(), sum_rule);
    c.eq("quadratic_system.total_zero_free", b.total(), sum_rule);
  } else {
    r.skipped.push_back("quadratic-system brute count (q exceeds the O(q^2) budget)");
  }

  if (r.counts.d_system) {
    const DSystemCounts& ds = *r.counts.d_system;
    if (r.closed_counts) c.eq("d_system.n4", ds.total, r.closed_counts->n4);
    for (const SignTriple t : {SignTriple{1, -1, -1}, SignTriple{-1, 1, -1}, SignTriple{-1, -1, 1}}) {
      c.eq("d_system.n" + t.label() + " = q-2", ds.by_sign[t], q - 2);
    }
    if (r.closed_counts) c.eq("N4.decomposition", N4_decomposition(q, chi_neg3, ds.total), r.closed_counts->N4);
  }
  if (r.closed_counts) {
    c.eq("N4.closed_vs_row_scaled", r.counts.N4_ddt, r.closed_counts->N4);
    if (r.counts.N4_direct) c.eq("N4.closed_vs_direct", *r.counts.N4_direct, r.closed_counts->N4);
  }

  const SpecialDeltas sd = delta_special(field, workers);
  c.eq("special.delta(chi(2)/2)", sd.observed_delta_half, sd.delta_half);
  c.eq("special.delta(1)", sd.observed_delta_one, sd.delta_one);
  c.eq("special.omega1", sd.observed_omega1, sd.omega1);
  c.eq("special.omega3", sd.observed_omega3, sd.omega3);

  std::int64_t odd_off_half = 0;
  for (Index b = 0; b < row.size(); ++b) {
    if (b != sd.half && row[b] % 2 != 0) ++odd_off_half;
  }
  c.eq("parity.odd_delta_off_chi(2)/2", odd_off_half, 0);

  try {
    r.closed = spectrum_closed(field, r.char_sums);
    for (std::uint32_t i = 0; i <= 4; ++i) {
      c.eq("closed.omega" + std::to_string(i), r.brute.at(i), r.closed->at(i));
    }
    c.eq("closed.delta_uniformity", r.brute.delta_uniformity, r.closed->delta_uniformity);
    if (r.recurrence) {
      const DifferentialSpectrum via_rec = spectrum_closed(field, *r.recurrence);
      c.eq("closed.recurrence_sums_match", via_rec.same_distribution(r.brute), 1);
    }
  } catch (const InexactDivision& e) {
    c.fail(std::string("closed spectrum divides exactly: ") + e.what());
  }
  if (field.q() != 11) c.ge("closed.omega4>=1", r.brute.at(4), 1);

  return r;
}

std::vector<SweepField> sweep_fields(std::uint64_t q_max, bool include_out_of_regime, std::uint64_t size_cap) {
  if (q_max > size_cap || q_max > kHardSizeLimit) {
    throw InvalidArgument("q_max = " + std::to_string(q_max) + " exceeds the size cap " + std::to_string(size_cap));
  }
  std::vector<SweepField> out;
  for (std::uint64_t q = 7; q <= q_max; q += 2) {
    const auto pn = decompose_prime_power(q);
    if (!pn) continue;
    if (!include_out_of_regime && (q % 4 != 3 || pn->first == 3)) continue;
    out.push_back({pn->first, pn->second, static_cast<std::uint32_t>(q)});
  }
  return out;
}

std::vector<SpectrumReport> verify_sweep(std::uint64_t q_max, bool include_out_of_regime,
                                         const ReportOptions& options, std::uint64_t size_cap) {
  const auto fields = sweep_fields(q_max, include_out_of_regime, size_cap);
  std::vector<std::optional<SpectrumReport>> slots(fields.size());
  ReportOptions single = options;
  single.workers = 1;

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < fields.size(); i = next++) {
      try {
        const Field f = Field::build(fields[i].p, fields[i].n, size_cap);
        slots[i] = make_report(f, default_exponent(f.q()), single);
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < std::max(1u, options.workers); ++w) pool.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);

  std::vector<SpectrumReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace dspec
