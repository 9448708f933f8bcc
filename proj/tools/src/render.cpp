#include <cstdio>
#include <set>
#include <sstream>

#include "dspec_cli/cli.hpp"

namespace dspec::cli {

namespace {

std::string polynomial_text(const std::vector<std::uint32_t>& low_first) {
  std::string s;
  for (std::size_t i = low_first.size(); i-- > 0;) {
    const auto c = low_first[i];
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (c != 1 || i == 0) s += std::to_string(c);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string field_line(const Field& f) {
  return "F_" + std::to_string(f.q()) + "  p = " + std::to_string(f.p()) + ", n = " + std::to_string(f.n()) +
         ", modulus " + polynomial_text(f.modulus());
}

Json omega_json(const DifferentialSpectrum& s) {
  Json o = Json::object();
  for (const auto& [i, w] : s.omega) o[std::to_string(i)] = w;
  return o;
}

Json sign_counts_json(const SignCounts& c) {
  Json o = Json::object();
  for (std::size_t s = 0; s < 8; ++s) o[SignTriple::from_slot(s).label()] = c.slot(s);
  return o;
}

Json checks_json(const std::vector<IdentityCheck>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) a.push_back({{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  return a;
}

template <class T>
Json or_null(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

bool is_counts_check(const std::string& name) {
  for (const char* prefix : {"quadratic_system.", "d_system.", "N4."}) {
    if (name.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

void checks_footer(std::ostringstream& os, const std::vector<IdentityCheck>& checks, const std::vector<std::string>& skipped) {
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (c.pass) continue;
    ++failed;
    os << "FAIL " << c.name << ": " << c.lhs << " vs " << c.rhs << "\n";
  }
  for (const auto& s : skipped) os << "skipped: " << s << "\n";
  os << "checks: " << checks.size() << " run, " << failed << " failed\n";
  if (failed == 0) os << "all checks pass\n";
}

}  // namespace

Json report_json(const SpectrumReport& r) {
  Json j;
  j["field"] = {{"p", r.field.p()}, {"n", r.field.n()}, {"q", r.field.q()}, {"modulus", r.field.modulus()}};
  j["d"] = r.d;

  Json spectrum = {{"omega", omega_json(r.brute)}, {"delta_uniformity", r.brute.delta_uniformity}};
  spectrum["closed"] = r.closed ? Json{{"omega", omega_json(*r.closed)}, {"delta_uniformity", r.closed->delta_uniformity}}
                                : Json(nullptr);
  if (r.branch) {
    spectrum["branch"] = {{"chi2", r.branch->chi2.value()},
                          {"chi3", r.branch->chi3.value()},
                          {"chi_neg3", r.branch->chi_neg3.value()},
                          {"chi_root", r.branch->chi_root ? Json(r.branch->chi_root->value()) : Json(nullptr)},
                          {"special_branch", r.branch->special_branch}};
  } else {
    spectrum["branch"] = nullptr;
  }
  j["spectrum"] = spectrum;

  Json sums = {{"lambda1", r.char_sums.lambda1},
               {"lambda2", r.char_sums.lambda2},
               {"method", std::string(to_string(r.char_sums.method))}};
  sums["recurrence"] =
      r.recurrence ? Json{{"lambda1", r.recurrence->lambda1}, {"lambda2", r.recurrence->lambda2}} : Json(nullptr);
  if (r.six_sums) {
    const auto& s = *r.six_sums;
    Json items = Json::array();
    for (std::size_t i = 0; i < s.count; ++i) {
      items.push_back({{"polynomial", std::string(SixSums::polynomial_name(i))},
                       {"enumerated", s.enumerated[i]},
                       {"closed", s.closed[i]}});
    }
    sums["six_sums"] = {{"items", items}, {"agree", s.agree()}};
  } else {
    sums["six_sums"] = nullptr;
  }
  j["char_sums"] = sums;
  j["counts"] = counts_json(r);
  j["checks"] = checks_json(r.checks);
  j["classification"] = {{"is_permutation", r.is_permutation},
                         {"is_apn", r.is_apn},
                         {"delta_uniformity", r.brute.delta_uniformity}};
  return j;
}

Json counts_json(const SpectrumReport& r) {
  Json brute;
  brute["n_ijk"] = r.counts.n_ijk ? sign_counts_json(*r.counts.n_ijk) : Json(nullptr);
  brute["n4"] = r.counts.d_system ? Json(r.counts.d_system->total) : Json(nullptr);
  brute["n4_by_sign"] = r.counts.d_system ? sign_counts_json(r.counts.d_system->by_sign) : Json(nullptr);
  brute["N4_row_scaled"] = r.counts.N4_ddt;
  brute["N4_direct"] = or_null(r.counts.N4_direct);
  Json closed = nullptr;
  if (r.closed_counts) {
    closed = {{"n_ijk", sign_counts_json(r.closed_counts->n_ijk)},
              {"n4", r.closed_counts->n4},
              {"N4", r.closed_counts->N4}};
  }
  return {{"brute", brute}, {"closed", closed}, {"skipped", r.skipped}};
}

std::string report_text(const SpectrumReport& r) {
  std::ostringstream os;
  os << field_line(r.field) << "\n";
  os << "d = " << r.d << (r.closed ? "  (closed form applies)" : "  (brute force only)") << "\n\n";

  std::set<std::uint32_t> keys;
  for (const auto& [i, w] : r.brute.omega) keys.insert(i);
  if (r.closed)
    for (const auto& [i, w] : r.closed->omega) keys.insert(i);
  os << pad("i", 4) << pad("brute", 10) << (r.closed ? pad("closed", 10) : "") << "\n";
  for (const auto i : keys) {
    os << pad(std::to_string(i), 4) << pad(std::to_string(r.brute.at(i)), 10);
    if (r.closed) os << pad(r.closed->omega.count(i) ? std::to_string(r.closed->at(i)) : "-", 10);
    os << "\n";
  }
  os << "\ndelta_uniformity = " << r.brute.delta_uniformity << "\n";
  os << "lambda1 = " << r.char_sums.lambda1 << ", lambda2 = " << r.char_sums.lambda2 << " (enumerated)";
  if (r.recurrence) os << "; recurrence gives " << r.recurrence->lambda1 << ", " << r.recurrence->lambda2;
  os << "\n";
  if (r.branch) os << "special branch: " << (r.branch->special_branch ? "yes" : "no") << "\n";
  os << "permutation: " << (r.is_permutation ? "yes" : "no") << ", APN: " << (r.is_apn ? "yes" : "no") << "\n";
  checks_footer(os, r.checks, r.skipped);
  return os.str();
}

std::string report_csv(const SpectrumReport& r) {
  std::ostringstream os;
  os << "i,brute,closed\n";
  std::set<std::uint32_t> keys;
  for (const auto& [i, w] : r.brute.omega) keys.insert(i);
  if (r.closed)
    for (const auto& [i, w] : r.closed->omega) keys.insert(i);
  for (const auto i : keys) {
    os << i << "," << r.brute.at(i) << ",";
    if (r.closed && r.closed->omega.count(i)) os << r.closed->at(i);
    os << "\n";
  }
  return os.str();
}

std::string counts_text(const SpectrumReport& r) {
  std::ostringstream os;
  os << field_line(r.field) << "\n";
  os << "d = " << r.d << "\n\n";
  const bool closed = r.closed_counts.has_value();
  os << pad("", 14) << pad("brute", 12) << (closed ? pad("closed", 12) : "") << "\n";
  auto row = [&](const std::string& name, const std::string& brute, const std::string& cl) {
    os << name << std::string(name.size() < 14 ? 14 - name.size() : 1, ' ') << pad(brute, 12)
       << (closed ? pad(cl, 12) : "") << "\n";
  };
  for (std::size_t s = 0; s < 8; ++s) {
    const std::string label = "N" + SignTriple::from_slot(s).label();
    row(label, r.counts.n_ijk ? std::to_string(r.counts.n_ijk->slot(s)) : "-",
        closed ? std::to_string(r.closed_counts->n_ijk.slot(s)) : "");
  }
  row("n4", r.counts.d_system ? std::to_string(r.counts.d_system->total) : "-",
      closed ? std::to_string(r.closed_counts->n4) : "");
  row("N4", std::to_string(r.counts.N4_ddt), closed ? std::to_string(r.closed_counts->N4) : "");
  row("N4 direct", r.counts.N4_direct ? std::to_string(*r.counts.N4_direct) : "-", "");
  os << "\n";
  std::vector<IdentityCheck> checks;
  for (const auto& c : r.checks)
    if (is_counts_check(c.name)) checks.push_back(c);
  checks_footer(os, checks, r.skipped);
  return os.str();
}

std::string sweep_text(const std::vector<SpectrumReport>& reports) {
  std::ostringstream os;
  os << pad("q", 8) << pad("p", 6) << pad("n", 3) << pad("d", 8) << pad("delta", 6);
  for (int i = 0; i <= 4; ++i) os << pad("w" + std::to_string(i), 7);
  os << pad("checks", 8) << "  result\n";
  std::size_t bad = 0;
  for (const auto& r : reports) {
    os << pad(std::to_string(r.field.q()), 8) << pad(std::to_string(r.field.p()), 6)
       << pad(std::to_string(r.field.n()), 3) << pad(std::to_string(r.d), 8)
       << pad(std::to_string(r.brute.delta_uniformity), 6);
    for (std::uint32_t i = 0; i <= 4; ++i) os << pad(std::to_string(r.brute.at(i)), 7);
    os << pad(std::to_string(r.checks.size()), 8) << "  " << (r.all_pass() ? "pass" : "FAIL");
    for (const auto& c : r.checks)
      if (!c.pass) os << " " << c.name;
    os << "\n";
    bad += !r.all_pass();
  }
  os << reports.size() << " fields, " << bad << " with failures\n";
  return os.str();
}

Json sweep_json(const std::vector<SpectrumReport>& reports, const RunConfig& cfg) {
  Json fields = Json::array();
  std::size_t bad = 0;
  for (const auto& r : reports) {
    Json failed = Json::array();
    for (const auto& c : r.checks)
      if (!c.pass) failed.push_back(c.name);
    fields.push_back({{"q", r.field.q()},
                      {"p", r.field.p()},
                      {"n", r.field.n()},
                      {"d", r.d},
                      {"delta_uniformity", r.brute.delta_uniformity},
                      {"omega", omega_json(r.brute)},
                      {"closed_form", r.closed.has_value()},
                      {"checks", r.checks.size()},
                      {"failed", failed},
                      {"pass", r.all_pass()}});
    bad += !r.all_pass();
  }
  return {{"q_max", cfg.q_max},
          {"include_out_of_regime", cfg.include_out_of_regime},
          {"fields", fields},
          {"fields_checked", reports.size()},
          {"fields_failed", bad},
          {"pass", bad == 0}};
}

std::string sweep_csv(const std::vector<SpectrumReport>& reports) {
  std::ostringstream os;
  os << "q,p,n,d,delta_uniformity,omega0,omega1,omega2,omega3,omega4,checks,failures\n";
  for (const auto& r : reports) {
    os << r.field.q() << "," << r.field.p() << "," << r.field.n() << "," << r.d << "," << r.brute.delta_uniformity;
    for (std::uint32_t i = 0; i <= 4; ++i) os << "," << r.brute.at(i);
    os << "," << r.checks.size() << "," << r.failures() << "\n";
  }
  return os.str();
}

std::string ddt_csv(const Ddt& table) {
  std::string s = "a,b,count\n";
  const Index q = table.q();
  s.reserve(s.size() + std::size_t{q} * q * 8);
  char buf[48];
  for (Index a = 0; a < q; ++a) {
    const DdtRow row = table.row(a);
    for (Index b = 0; b < q; ++b) {
      const int len = std::snprintf(buf, sizeof buf, "%u,%u,%lld\n", a, b, static_cast<long long>(row[b]));
      s.append(buf, static_cast<std::size_t>(len));
    }
  }
  return s;
}

}  // namespace dspec::cli
