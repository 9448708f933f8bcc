#include "dspec_cli/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

using dspec::cli::Json;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "dspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = dspec::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string run_binary(const std::string& args) {
  const std::string cmd = std::string(DSPEC_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {};
  std::string out;
  char buf[4096];
  while (const std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  pclose(pipe);
  return out;
}

TEST(Spectrum, TextForFiftyNine) {
  const auto r = run({"spectrum", "--p", "59", "--n", "1"});
  EXPECT_EQ(r.status, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("delta_uniformity = 4"), std::string::npos);
  EXPECT_NE(r.out.find("all checks pass"), std::string::npos);
  EXPECT_NE(r.out.find("      34        34"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("      20        20"), std::string::npos);
}

TEST(Spectrum, JsonSchemaAndRoundTrip) {
  const auto r = run({"spectrum", "--p", "11", "--n", "1", "--output", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = Json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"field", "d", "spectrum", "char_sums", "counts", "checks",
                                            "classification"}));
  EXPECT_EQ(j["field"]["q"], 11);
  EXPECT_EQ(j["field"]["modulus"], Json::array({0, 1}));
  EXPECT_EQ(j["d"], 7);
  EXPECT_EQ(j["spectrum"]["omega"]["0"], 5);
  EXPECT_EQ(j["spectrum"]["omega"]["1"], 1);
  EXPECT_EQ(j["spectrum"]["omega"]["2"], 5);
  EXPECT_EQ(j["spectrum"]["delta_uniformity"], 2);
  EXPECT_EQ(j["spectrum"]["closed"]["omega"]["4"], 0);
  EXPECT_EQ(j["classification"]["is_apn"], true);
  EXPECT_EQ(j["classification"]["is_permutation"], true);
  EXPECT_EQ(j["counts"]["closed"]["N4"], 331);
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
    EXPECT_TRUE(c["lhs"].is_number_integer());
  }
  // Re-parsing the re-serialized document reproduces every value.
  EXPECT_EQ(Json::parse(j.dump()), j);
  EXPECT_EQ(Json::parse(j.dump(2)).dump(2) + "\n", r.out);
}

TEST(Spectrum, CsvAndOutFile) {
  const auto r = run({"spectrum", "--p", "7", "--output", "csv"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "i,brute,closed\n0,4,4\n1,1,1\n2,1,1\n3,0,\n4,1,1\n");

  const auto path = std::filesystem::temp_directory_path() / "dspec_cli_test_out.csv";
  const auto w = run({"spectrum", "--p", "7", "--output", "csv", "--out", path.string()});
  EXPECT_EQ(w.status, 0);
  EXPECT_TRUE(w.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), r.out);
  std::filesystem::remove(path);
}

TEST(Spectrum, OutOfRegimeField) {
  const auto r = run({"spectrum", "--p", "13", "--d", "8", "--output", "json"});
  EXPECT_EQ(r.status, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["spectrum"]["closed"].is_null());
  EXPECT_LE(j["spectrum"]["delta_uniformity"].get<int>(), 3);
}

TEST(ExitCodes, UsageAndConfigErrors) {
  const auto even = run({"spectrum", "--p", "2", "--n", "4"});
  EXPECT_EQ(even.status, 2);
  EXPECT_NE(even.err.find("odd"), std::string::npos) << even.err;
  EXPECT_EQ(run({"spectrum"}).status, 2);
  EXPECT_EQ(run({"spectrum", "--p", "7", "--bogus"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"spectrum", "--p", "7", "--output", "xml"}).status, 2);
  EXPECT_EQ(run({"spectrum", "--p", "7", "--workers", "0"}).status, 2);
  EXPECT_EQ(run({"spectrum", "--p", "9"}).status, 2);
  EXPECT_EQ(run({"charsums", "--p", "3", "--n", "2", "--method", "recurrence"}).status, 2);
  EXPECT_EQ(run({"ddt", "--p", "59", "--budget", "50"}).status, 2);
  EXPECT_EQ(run({"verify", "--q-max", "10000000"}).status, 2);
  EXPECT_EQ(run({"spectrum", "--help"}).status, 0);
}

TEST(ExitCodes, SizeCapFromEnvironment) {
  ::setenv("DSPEC_SIZE_CAP", "100", 1);
  EXPECT_EQ(run({"spectrum", "--p", "11", "--n", "2"}).status, 2);
  EXPECT_EQ(run({"spectrum", "--p", "7", "--n", "2"}).status, 0);
  ::setenv("DSPEC_SIZE_CAP", "abc", 1);
  EXPECT_EQ(run({"spectrum", "--p", "7"}).status, 2);
  ::unsetenv("DSPEC_SIZE_CAP");
}

TEST(CharSums, BothMethods) {
  const auto r = run({"charsums", "--p", "7", "--n", "2", "--method", "both"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("enumerated         14        -2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("recurrence         14        -2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("methods agree"), std::string::npos);

  const Json j = Json::parse(run({"charsums", "--p", "7", "--n", "3", "--output", "json"}).out);
  EXPECT_EQ(j["enumerated"]["lambda1"], 0);
  EXPECT_EQ(j["recurrence"]["lambda2"], 20);
  EXPECT_EQ(j["agree"], true);

  const auto p3 = run({"charsums", "--p", "3", "--n", "3"});
  EXPECT_EQ(p3.status, 0);
  EXPECT_NE(p3.out.find("recurrence unavailable"), std::string::npos);
}

TEST(Counts, Eleven) {
  const auto r = run({"counts", "--p", "11", "--n", "1", "--output", "json"});
  EXPECT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["counts"]["brute"]["n4"], 27);
  EXPECT_EQ(j["counts"]["closed"]["n4"], 27);
  EXPECT_EQ(j["counts"]["brute"]["N4_row_scaled"], 331);
  EXPECT_EQ(j["counts"]["brute"]["N4_direct"], 331);
  EXPECT_EQ(j["counts"]["closed"]["n_ijk"]["(1,-1,-1)"], 4);

  const auto t = run({"counts", "--p", "11"});
  EXPECT_NE(t.out.find("all checks pass"), std::string::npos) << t.out;
}

TEST(Ddt, CsvShapeAndRowMass) {
  const auto r = run({"ddt", "--p", "7", "--n", "1", "--d", "5"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "a,b,count");
  std::vector<long> mass(7, 0);
  int rows = 0;
  long prev = -1;
  while (std::getline(in, line)) {
    long a = 0, b = 0, c = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%ld,%ld,%ld", &a, &b, &c), 3) << line;
    EXPECT_GT(a * 7 + b, prev);  // enumeration order
    prev = a * 7 + b;
    mass[a] += c;
    ++rows;
  }
  EXPECT_EQ(rows, 49);
  for (const long m : mass) EXPECT_EQ(m, 7);
  EXPECT_EQ(r.out.substr(0, 20), "a,b,count\n0,0,7\n0,1,");
}

TEST(Verify, SweepToFiveHundred) {
  const auto r = run({"verify", "--q-max", "500", "--output", "json"});
  EXPECT_EQ(r.status, 0) << r.out.substr(0, 2000);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["pass"], true);
  std::vector<int> qs;
  for (const auto& f : j["fields"]) qs.push_back(f["q"].get<int>());
  ASSERT_GE(qs.size(), 7u);
  EXPECT_EQ(std::vector<int>(qs.begin(), qs.begin() + 7), (std::vector<int>{7, 11, 19, 23, 31, 43, 47}));
  EXPECT_TRUE(std::is_sorted(qs.begin(), qs.end()));
  EXPECT_NE(std::find(qs.begin(), qs.end(), 343), qs.end());
  EXPECT_EQ(std::find(qs.begin(), qs.end(), 27), qs.end());

  const auto text = run({"verify", "--q-max", "100"});
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("with failures"), std::string::npos);
}

TEST(Verify, OutOfRegimeFlag) {
  const auto r = run({"verify", "--q-max", "100", "--include-out-of-regime", "--output", "csv"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("\n9,3,2,6,1,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\n13,13,1,8,"), std::string::npos);
}

TEST(Determinism, IndependentOfWorkersAndRepeats) {
  const auto one = run({"verify", "--q-max", "400", "--output", "json", "--workers", "1"});
  const auto three = run({"verify", "--q-max", "400", "--output", "json", "--workers", "3"});
  EXPECT_EQ(one.out, three.out);
  const auto s1 = run({"spectrum", "--p", "7", "--n", "3", "--output", "json", "--workers", "1"});
  const auto s4 = run({"spectrum", "--p", "7", "--n", "3", "--output", "json", "--workers", "4"});
  EXPECT_EQ(s1.out, s4.out);

  const std::string a = run_binary("spectrum --p 59 --n 1 --output json");
  const std::string b = run_binary("spectrum --p 59 --n 1 --output json");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, run({"spectrum", "--p", "59", "--n", "1", "--output", "json"}).out);
}

}  // namespace
