#pragma once

// Command-line front end: spectrum, charsums, counts, verify, ddt.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dspec/report.hpp"

namespace dspec::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::uint64_t p = 0;
  std::uint32_t n = 1;
  std::uint64_t d = 0;  // 0: (q + 3) / 2
  std::uint64_t q_max = 0;
  std::string method = "both";
  std::string output = "text";
  std::uint64_t budget = Budget{}.max_q;
  bool force = false;
  unsigned workers = 1;
  std::string out_path;
  bool include_out_of_regime = false;
  std::uint64_t size_cap = kDefaultSizeCap;
};

using Json = nlohmann::ordered_json;

// Reads DSPEC_SIZE_CAP; throws InvalidArgument for malformed values.
std::uint64_t size_cap_from_env();

Json report_json(const SpectrumReport& r);
std::string report_text(const SpectrumReport& r);
std::string report_csv(const SpectrumReport& r);
std::string counts_text(const SpectrumReport& r);
Json counts_json(const SpectrumReport& r);
std::string sweep_text(const std::vector<SpectrumReport>& reports);
Json sweep_json(const std::vector<SpectrumReport>& reports, const RunConfig& cfg);
std::string sweep_csv(const std::vector<SpectrumReport>& reports);
std::string ddt_csv(const Ddt& table);

// Exit status per ExitCode. Normal output goes to `out` (or --out), help
// and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dspec::cli
