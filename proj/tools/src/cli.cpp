#include "dspec_cli/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "dspec/errors.hpp"

namespace dspec::cli {

namespace {

const std::vector<std::string> kMethods{"enumerate", "recurrence", "both"};
const std::vector<std::string> kOutputs{"text", "json", "csv"};

struct Output {
  std::string body;
  int status = kPass;
};

void add_field_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "characteristic (odd prime)")->required();
  sub->add_option("--n", cfg.n, "extension degree")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--d", cfg.d, "exponent, default (q + 3) / 2")->check(CLI::PositiveNumber);
}

void add_run_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--output", cfg.output, "text, json or csv")->capture_default_str()->check(CLI::IsMember(kOutputs));
  sub->add_option("--budget", cfg.budget, "largest q for the O(q^2) oracles")->capture_default_str();
  sub->add_flag("--force", cfg.force, "run the O(q^2) oracles regardless of --budget");
  sub->add_option("--workers", cfg.workers, "worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
  sub->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ReportOptions report_options(const RunConfig& cfg) {
  ReportOptions o;
  o.budget = Budget{cfg.budget, cfg.force};
  o.workers = cfg.workers;
  return o;
}

Field build_field(const RunConfig& cfg) { return Field::build(cfg.p, cfg.n, cfg.size_cap); }

std::uint64_t exponent(const RunConfig& cfg, const Field& f) { return cfg.d != 0 ? cfg.d : default_exponent(f.q()); }

Output cmd_spectrum(const RunConfig& cfg) {
  const Field f = build_field(cfg);
  const auto r = make_report(f, exponent(cfg, f), report_options(cfg));
  Output o;
  o.status = r.all_pass() ? kPass : kMismatch;
  if (cfg.output == "json") {
    o.body = dump(report_json(r));
  } else if (cfg.output == "csv") {
    o.body = report_csv(r);
  } else {
    o.body = report_text(r);
  }
  return o;
}

Output cmd_counts(const RunConfig& cfg) {
  const Field f = build_field(cfg);
  const auto r = make_report(f, exponent(cfg, f), report_options(cfg));
  Output o;
  for (const auto& c : r.checks) {
    const bool counted = c.name.rfind("quadratic_system.", 0) == 0 || c.name.rfind("d_system.", 0) == 0 ||
                         c.name.rfind("N4.", 0) == 0;
    if (counted && !c.pass) o.status = kMismatch;
  }
  if (cfg.output == "json") {
    Json j;
    j["field"] = {{"p", f.p()}, {"n", f.n()}, {"q", f.q()}, {"modulus", f.modulus()}};
    j["d"] = r.d;
    j["counts"] = counts_json(r);
    o.body = dump(j);
  } else if (cfg.output == "csv") {
    const Json c = counts_json(r);
    o.body = "quantity,brute,closed\n";
    auto cell = [](const Json& v) { return v.is_null() ? std::string() : v.dump(); };
    const Json& b = c["brute"];
    const Json& cl = c["closed"];
    for (std::size_t s = 0; s < 8; ++s) {
      const std::string label = SignTriple::from_slot(s).label();
      o.body += "\"N" + label + "\"," + (b["n_ijk"].is_null() ? "" : cell(b["n_ijk"][label])) + "," +
                (cl.is_null() ? "" : cell(cl["n_ijk"][label])) + "\n";
    }
    o.body += "n4," + cell(b["n4"]) + "," + (cl.is_null() ? "" : cell(cl["n4"])) + "\n";
    o.body += "N4," + cell(b["N4_row_scaled"]) + "," + (cl.is_null() ? "" : cell(cl["N4"])) + "\n";
    o.body += "N4_direct," + cell(b["N4_direct"]) + ",\n";
  } else {
    o.body = counts_text(r);
  }
  return o;
}

Output cmd_charsums(const RunConfig& cfg) {
  const Field f = build_field(cfg);
  std::optional<CharSums> enumerated;
  std::optional<CharSums> recurrence;
  std::string note;
  if (cfg.method != "recurrence") enumerated = lambda_sums_enumerated(f, cfg.workers);
  if (cfg.method == "recurrence") {
    recurrence = lambda_sums_recurrence(f.p(), f.n());  // surfaces PreconditionError for p = 3
  } else if (cfg.method == "both") {
    if (f.p() == 3) {
      note = "recurrence unavailable for p = 3";
    } else {
      recurrence = lambda_sums_recurrence(f.p(), f.n());
    }
  }

  Output o;
  const bool agree = !(enumerated && recurrence) ||
                     (enumerated->lambda1 == recurrence->lambda1 && enumerated->lambda2 == recurrence->lambda2);
  bool weil = true;
  for (const auto* s : {enumerated ? &*enumerated : nullptr, recurrence ? &*recurrence : nullptr}) {
    if (s) weil = weil && within_weil_bound(s->lambda1, f.q()) && within_weil_bound(s->lambda2, f.q());
  }
  o.status = agree && weil ? kPass : kMismatch;

  if (cfg.output == "json") {
    auto sums = [](const std::optional<CharSums>& s) {
      return s ? Json{{"lambda1", s->lambda1}, {"lambda2", s->lambda2}} : Json(nullptr);
    };
    Json j;
    j["field"] = {{"p", f.p()}, {"n", f.n()}, {"q", f.q()}, {"modulus", f.modulus()}};
    j["method"] = cfg.method;
    j["enumerated"] = sums(enumerated);
    j["recurrence"] = sums(recurrence);
    j["agree"] = agree;
    j["weil_bound"] = weil;
    if (!note.empty()) j["note"] = note;
    o.body = dump(j);
  } else if (cfg.output == "csv") {
    o.body = "method,lambda1,lambda2\n";
    if (enumerated) o.body += "enumerated," + std::to_string(enumerated->lambda1) + "," + std::to_string(enumerated->lambda2) + "\n";
    if (recurrence) o.body += "recurrence," + std::to_string(recurrence->lambda1) + "," + std::to_string(recurrence->lambda2) + "\n";
  } else {
    std::string& s = o.body;
    s = "F_" + std::to_string(f.q()) + "  p = " + std::to_string(f.p()) + ", n = " + std::to_string(f.n()) + "\n";
    s += "method        lambda1   lambda2\n";
    auto line = [&](const char* name, const CharSums& v) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%-12s %8lld  %8lld\n", name, static_cast<long long>(v.lambda1),
                    static_cast<long long>(v.lambda2));
      s += buf;
    };
    if (enumerated) line("enumerated", *enumerated);
    if (recurrence) line("recurrence", *recurrence);
    if (!note.empty()) s += note + "\n";
    if (enumerated && recurrence) s += agree ? "methods agree\n" : "MISMATCH: methods disagree\n";
    s += weil ? "Weil bound holds\n" : "FAIL: Weil bound violated\n";
  }
  return o;
}

Output cmd_verify(const RunConfig& cfg) {
  const auto reports = verify_sweep(cfg.q_max, cfg.include_out_of_regime, report_options(cfg), cfg.size_cap);
  Output o;
  for (const auto& r : reports)
    if (!r.all_pass()) o.status = kMismatch;
  if (cfg.output == "json") {
    o.body = dump(sweep_json(reports, cfg));
  } else if (cfg.output == "csv") {
    o.body = sweep_csv(reports);
  } else {
    o.body = sweep_text(reports);
  }
  return o;
}

Output cmd_ddt(const RunConfig& cfg) {
  if (cfg.output == "json") throw InvalidArgument("ddt supports --output csv only");
  const Field f = build_field(cfg);
  const auto table = full_ddt(f, exponent(cfg, f), Budget{cfg.budget, cfg.force}, cfg.workers);
  return {ddt_csv(table), kPass};
}

}  // namespace

std::uint64_t size_cap_from_env() {
  const char* raw = std::getenv("DSPEC_SIZE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultSizeCap;
  const std::string_view v(raw);
  std::uint64_t cap = 0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), cap);
  if (ec != std::errc() || end != v.data() + v.size() || cap == 0) {
    throw InvalidArgument("DSPEC_SIZE_CAP must be a positive integer, got '" + std::string(v) + "'");
  }
  if (cap > kHardSizeLimit) {
    throw InvalidArgument("DSPEC_SIZE_CAP exceeds the hard limit " + std::to_string(kHardSizeLimit));
  }
  return cap;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Differential spectra of power maps x^d over odd-characteristic finite fields"};
  app.require_subcommand(1, 1);

  auto* spectrum = app.add_subcommand("spectrum", "spectrum, closed form and every identity check for one field");
  add_field_options(spectrum, cfg);
  add_run_options(spectrum, cfg);

  auto* charsums = app.add_subcommand("charsums", "the two cubic character sums");
  charsums->add_option("--p", cfg.p, "characteristic (odd prime)")->required();
  charsums->add_option("--n", cfg.n, "extension degree")->capture_default_str()->check(CLI::PositiveNumber);
  charsums->add_option("--method", cfg.method, "enumerate, recurrence or both")
      ->capture_default_str()
      ->check(CLI::IsMember(kMethods));
  add_run_options(charsums, cfg);

  auto* counts = app.add_subcommand("counts", "solution counts, brute force and closed form");
  add_field_options(counts, cfg);
  add_run_options(counts, cfg);

  auto* verify = app.add_subcommand("verify", "sweep every q = 3 mod 4, p != 3, 7 <= q <= q_max");
  verify->add_option("--q-max", cfg.q_max, "largest field order")->required();
  verify->add_flag("--include-out-of-regime", cfg.include_out_of_regime,
                   "also run the brute-only checks on p = 3 and q = 1 mod 4 fields");
  add_run_options(verify, cfg);

  auto* ddt = app.add_subcommand("ddt", "full difference distribution table as CSV (a,b,count)");
  add_field_options(ddt, cfg);
  add_run_options(ddt, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    cfg.size_cap = size_cap_from_env();
    Output result;
    if (app.got_subcommand(spectrum)) {
      result = cmd_spectrum(cfg);
    } else if (app.got_subcommand(charsums)) {
      result = cmd_charsums(cfg);
    } else if (app.got_subcommand(counts)) {
      result = cmd_counts(cfg);
    } else if (app.got_subcommand(verify)) {
      result = cmd_verify(cfg);
    } else {
      result = cmd_ddt(cfg);
    }

    if (cfg.out_path.empty()) {
      out << result.body;
      out.flush();
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << cfg.out_path << " for writing\n";
        return kUsage;
      }
      file << result.body;
    }
    return result.status;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget or pass --force)\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "mismatch: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace dspec::cli
