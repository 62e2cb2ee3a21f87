#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cviso");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cviso::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, StateJson) {
  const auto res = run_cli({"state", "--r", "1", "--p", "0.5", "--format", "json"});
  ASSERT_EQ(res.code, 0) << res.err;
  const auto j = nlohmann::json::parse(res.out);
  EXPECT_NEAR(j["nu"].get<double>(), 3.29629903277997, 1e-12);
  EXPECT_NEAR(j["purity"].get<double>(), 0.0920336813047350, 1e-13);
  EXPECT_EQ(j["cm"].size(), 4u);
}

TEST(Cli, StateAtZeroSqueezingIsVacuum) {
  const auto res = run_cli({"state", "--r", "0", "--p", "0.5", "--format", "json"});
  ASSERT_EQ(res.code, 0);
  const auto j = nlohmann::json::parse(res.out);
  EXPECT_EQ(j["cm"][0][0].get<double>(), 1.0);
  EXPECT_EQ(j["cm"][0][2].get<double>(), 0.0);
  EXPECT_EQ(j["S"].get<double>(), 0.0);
}

TEST(Cli, BitsScalesEntropies) {
  const auto nats = nlohmann::json::parse(
      run_cli({"measures", "--r", "1", "--p", "0.9", "--format", "json"}).out);
  const auto bits = nlohmann::json::parse(
      run_cli({"measures", "--r", "1", "--p", "0.9", "--format", "json", "--bits"}).out);
  EXPECT_NEAR(bits["eof"].get<double>() * std::log(2.0), nats["eof"].get<double>(), 1e-14);
  EXPECT_EQ(bits["entropy_unit"], "bits");
}

TEST(Cli, UsageErrorsNameTheFlag) {
  auto res = run_cli({"state", "--r", "1", "--p", "1.5"});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("--p"), std::string::npos);
  EXPECT_EQ(count_lines(res.err), 1);

  res = run_cli({"state", "--r", "-0.5", "--p", "0.5"});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("--r"), std::string::npos);

  res = run_cli({"channel", "--r", "1", "--p", "0.5", "--input", "thermal"});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("--nbar"), std::string::npos);

  res = run_cli({"fock", "--r", "1", "--p", "0.5", "--cutoff", "3"});
  EXPECT_EQ(res.code, 2);
  EXPECT_NE(res.err.find("--cutoff"), std::string::npos);

  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"nonsense"}).code, 2);
  EXPECT_EQ(run_cli({"state", "--r", "1"}).code, 2);
  EXPECT_EQ(run_cli({"state", "--r", "1", "--p", "0.5", "--format", "xml"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, 0); }

TEST(Cli, Criteria) {
  const auto res = run_cli({"criteria", "--r", "1", "--p", "0.9", "--format", "json"});
  ASSERT_EQ(res.code, 0);
  const auto j = nlohmann::json::parse(res.out);
  EXPECT_TRUE(j["ppt_entangled"].get<bool>());
  EXPECT_TRUE(j["steerable"].get<bool>());
  EXPECT_TRUE(j["ccnr_detects"].get<bool>());
  EXPECT_NEAR(j["ccnr_threshold"].get<double>(), 0.899454438341656, 1e-12);
  const auto text = run_cli({"criteria", "--r", "1", "--p", "0.9"});
  EXPECT_NE(text.out.find("(coth r + 3 tanh r)/4"), std::string::npos);
}

TEST(Cli, ChannelVerdicts) {
  auto j = nlohmann::json::parse(
      run_cli({"channel", "--r", "0.1", "--p", "1", "--input", "thermal", "--nbar", "2",
               "--format", "json"})
          .out);
  EXPECT_EQ(j["verdict"], "less noisy");
  EXPECT_NEAR(j["output_cm"][0][0].get<double>(), 1.01333324, 1e-6);
  j = nlohmann::json::parse(
      run_cli({"channel", "--r", "1", "--p", "0.5", "--format", "json"}).out);
  EXPECT_NEAR(j["output_cm"][1][1].get<double>(), 3.07164676831272, 1e-12);
  EXPECT_EQ(j["verdict"], "noisier");
  j = nlohmann::json::parse(run_cli({"channel", "--r", "1", "--p", "1", "--format", "json"}).out);
  EXPECT_NEAR(j["output_cm"][0][0].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["verdict"], "unchanged");
}

TEST(Cli, SweepIsDeterministicAndSorted) {
  const std::vector<std::string> args{"sweep", "--r-min", "0", "--r-max", "2", "--r-steps", "3",
                                      "--p-min", "0", "--p-max", "1", "--p-steps", "3"};
  const auto a = run_cli(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const auto b = run_cli(threaded);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(count_lines(a.out), 10);
  EXPECT_NE(a.out.find("\n0,0.5,1,1,1,0,0,0,0,0,0,0,0\n"), std::string::npos);
}

TEST(Cli, SweepWritesFileAndReportsIoErrors) {
  const auto path = std::filesystem::temp_directory_path() / "cviso_cli_sweep.csv";
  const auto res = run_cli({"sweep", "--r-steps", "2", "--p-steps", "2", "--out", path.string()});
  ASSERT_EQ(res.code, 0);
  EXPECT_TRUE(res.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("r,p,nu,", 0), 0u);
  std::filesystem::remove(path);

  const auto bad = run_cli({"sweep", "--r-steps", "2", "--out", "/nonexistent-dir/out.csv"});
  EXPECT_EQ(bad.code, 4);
  EXPECT_NE(bad.err.find("/nonexistent-dir/out.csv"), std::string::npos);
  EXPECT_EQ(count_lines(bad.err), 1);
}

TEST(Cli, FockChecks) {
  const auto ok = run_cli({"fock", "--r", "1", "--p", "0.5", "--check", "--format", "json"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(nlohmann::json::parse(ok.out)["checks_passed"].get<bool>());

  const auto ent = run_cli({"fock", "--r", "1", "--p", "0.9", "--format", "json"});
  EXPECT_LT(nlohmann::json::parse(ent.out)["min_pt_eigenvalue"].get<double>(), 0.0);

  const auto tail = run_cli({"fock", "--r", "1", "--p", "0.5", "--cutoff", "4"});
  EXPECT_EQ(tail.code, 3);
  EXPECT_NE(tail.err.find("--cutoff"), std::string::npos);
  EXPECT_EQ(count_lines(tail.err), 1);

  const auto dump = run_cli({"fock", "--r", "0.3", "--p", "0.5", "--cutoff", "8", "--dump",
                             "/nonexistent-dir/rho.bin"});
  EXPECT_EQ(dump.code, 4);
  EXPECT_NE(dump.err.find("--dump"), std::string::npos);
}
