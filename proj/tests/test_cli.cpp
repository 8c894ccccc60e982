#include "qhb/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qhb::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(QHB_SAMPLES_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("qhb_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(CliKraw, Values) {
  EXPECT_EQ(run_cli({"kraw", "--k", "1", "--x", "2", "--n", "5", "--m", "2"}).out, "7\n");
  EXPECT_EQ(run_cli({"kraw", "--k", "0", "--x", "3", "--n", "5", "--m", "2"}).out, "1\n");
}

TEST(CliKraw, DomainErrorExitsTwo) {
  const auto r = run_cli({"kraw", "--k", "9", "--x", "0", "--n", "5", "--m", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(CliKraw, Formats) {
  const auto j = json::parse(run_cli({"--format", "json", "kraw", "--k", "2", "--x", "0", "--n", "4", "--m", "2"}).out);
  EXPECT_EQ(j["value"], "54");
  const auto c = run_cli({"kraw", "--k", "2", "--x", "0", "--n", "4", "--m", "2", "--format", "csv"});
  EXPECT_EQ(c.out, "k,x,n,m,value\n2,0,4,2,54\n");
}

TEST(CliUsage, Errors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"nonsense"}).code, 2);
  EXPECT_EQ(run_cli({"kraw", "--k", "1"}).code, 2);
  EXPECT_EQ(run_cli({"--format", "xml", "kraw", "--k", "1", "--x", "0", "--n", "2", "--m", "2"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliBound, PerfectCodeWitness) {
  const auto r = run_cli({"bound", "--file", sample("witness_n5_d3_m2.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("bound: K <= 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("argmax_t: 0"), std::string::npos);
  const auto j = json::parse(run_cli({"bound", "--file", sample("witness_n5_d3_m2.json"), "--format", "json"}).out);
  EXPECT_EQ(j["bound"]["bound"], "2");
  EXPECT_EQ(j["bound"]["bound_floor"], "2");
  EXPECT_EQ(j["bound"]["ratios"], json::array({"64", "256/9", "32"}));
}

TEST(CliBound, BelowThresholdWitness) {
  const auto j = json::parse(run_cli({"--format", "json", "bound", "--file", sample("witness_n4_d3_m2.json")}).out);
  EXPECT_EQ(j["bound"]["bound"], "32/25");
  EXPECT_EQ(j["bound"]["argmax_t"], 2);
}

TEST(CliBound, ConditionFailureExitsThree) {
  const auto r = run_cli({"bound", "--file", sample("unit_witness_n4.json"), "--format", "json"});
  EXPECT_EQ(r.code, 3);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["bound"].is_null());
  EXPECT_EQ(j["conditions"]["cond2_violations"], json::array({1, 2, 3, 4}));
}

TEST(CliBound, MalformedInputExitsTwo) {
  EXPECT_EQ(run_cli({"bound", "--file", write_temp("bad.json", "{not json")}).code, 2);
  EXPECT_EQ(run_cli({"bound", "--file", "/nonexistent/witness.json"}).code, 2);
  EXPECT_EQ(run_cli({"bound", "--file", write_temp("short.json", R"({"n": 3, "m": 2, "S": [0], "coeffs": ["1"]})")}).code, 2);
}

TEST(CliBound, CsvRows) {
  const auto r = run_cli({"bound", "--file", sample("witness_n5_d3_m2.json"), "--format", "csv"});
  EXPECT_EQ(r.out,
            "t,in_S,f_t,f_value,ratio\n"
            "0,1,256,16384,64\n"
            "1,1,144,4096,256/9\n"
            "2,1,64,2048,32\n"
            "3,0,16,0,\n"
            "4,0,0,0,\n"
            "5,0,16,0,\n");
}

TEST(CliThreshold, Values) {
  const auto j5 = json::parse(run_cli({"threshold", "--d", "5", "--m", "2", "--format", "json"}).out);
  EXPECT_EQ(j5["threshold"], 9);
  EXPECT_EQ(j5["horizon"], 100);
  EXPECT_TRUE(j5["stable_tail"]);
  const auto r6 = run_cli({"threshold", "--d", "6", "--m", "2"});
  EXPECT_EQ(r6.code, 0);
  EXPECT_EQ(r6.out.rfind("N(6, 2) = 9\n", 0), 0u);
}

TEST(CliThreshold, HorizonBelowDistance) {
  EXPECT_EQ(run_cli({"threshold", "--d", "3", "--m", "2", "--horizon", "2"}).code, 2);
}

TEST(CliThreshold, UnstableTailExitsFour) {
  EXPECT_EQ(run_cli({"threshold", "--d", "7", "--m", "2", "--horizon", "14"}).code, 4);
  const auto r = run_cli({"threshold", "--d", "7", "--m", "2", "--horizon", "10"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("horizon"), std::string::npos);
}

TEST(CliThreshold, JsonReparsesUnderSchema) {
  const auto out = run_cli({"threshold", "--d", "3", "--m", "3", "--horizon", "40", "--format", "json"}).out;
  const auto report = json_io::threshold_from_json(json::parse(out));
  EXPECT_EQ(report.per_n.size(), 38u);
  EXPECT_EQ(report.m, 3);
}

TEST(CliTable1, BinaryValues) {
  const auto j = json::parse(run_cli({"table1", "--max-d", "7", "--m", "2", "--format", "json"}).out);
  std::vector<int> thresholds;
  for (const auto& row : j["rows"]) {
    thresholds.push_back(row["threshold"]);
    EXPECT_EQ(row["threshold"], row["reference"]);
  }
  EXPECT_EQ(thresholds, (std::vector<int>{1, 5, 9, 14}));
}

TEST(CliTable1, SingleRow) {
  const auto r = run_cli({"table1", "--max-d", "1", "--m", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "d,threshold,horizon,stable_tail,reference\n1,1,100,1,1\n");
}

TEST(CliTable1, NonbinaryFlagged) {
  const auto r = run_cli({"table1", "--max-d", "5", "--m", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("no published reference values for m = 3"), std::string::npos);
  const auto j = json::parse(run_cli({"table1", "--max-d", "5", "--m", "3", "--format", "json"}).out);
  EXPECT_FALSE(j["reference_available"]);
  EXPECT_EQ(j["rows"].size(), 3u);
}

TEST(CliTable1, BadArguments) { EXPECT_EQ(run_cli({"table1", "--max-d", "0"}).code, 2); }

TEST(CliMacWilliams, DeltaForward) {
  const auto j = json::parse(
      run_cli({"macwilliams", "--direction", "forward", "--file", sample("delta_n2_m2.json"), "--format", "json"}).out);
  EXPECT_EQ(j["A"], json::array({"1/4", "3/2", "9/4"}));
  EXPECT_EQ(j["K"], "1");
}

TEST(CliMacWilliams, ForwardThenInverseRestoresFile) {
  const auto forward = run_cli(
      {"macwilliams", "--direction", "forward", "--file", sample("distribution_n5_m2.json"), "--format", "json"});
  ASSERT_EQ(forward.code, 0);
  const auto path = write_temp("dual.json", forward.out);
  const auto back = run_cli({"macwilliams", "--direction", "inverse", "--file", path, "--format", "json"});
  std::ifstream in(sample("distribution_n5_m2.json"));
  EXPECT_EQ(json::parse(back.out), json::parse(in));
}

TEST(CliMacWilliams, MissingDimension) {
  const auto path = write_temp("nok.json", R"({"n": 2, "m": 2, "A": ["1", "0", "0"]})");
  const auto r = run_cli({"macwilliams", "--direction", "forward", "--file", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("K"), std::string::npos);
  EXPECT_EQ(run_cli({"macwilliams", "--direction", "sideways", "--file", path}).code, 2);
}

TEST(CliCheck, HammingEquality) {
  const auto r = run_cli({"check", "--n", "5", "--K", "2", "--d", "3", "--m", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hamming: K <= 2: satisfied with equality"), std::string::npos);
  EXPECT_NE(r.out.find("n >= N"), std::string::npos);
}

TEST(CliCheck, HammingViolated) {
  const auto j = json::parse(run_cli({"check", "--n", "5", "--K", "3", "--d", "3", "--m", "2", "--format", "json"}).out);
  EXPECT_EQ(j["hamming"]["status"], "violated");
  EXPECT_EQ(j["threshold"]["N"], 5);
  EXPECT_TRUE(j["threshold"]["hamming_applies_to_all_codes"]);
}

TEST(CliCheck, SingletonEquality) {
  const auto j = json::parse(run_cli({"check", "--n", "4", "--K", "1", "--d", "3", "--m", "2", "--format", "json"}).out);
  EXPECT_EQ(j["singleton"]["status"], "satisfied with equality");
  EXPECT_EQ(j["singleton"]["rhs"], "1");
  EXPECT_FALSE(j["threshold"]["hamming_applies_to_all_codes"]);
}

TEST(CliCheck, BadArguments) {
  EXPECT_EQ(run_cli({"check", "--n", "2", "--K", "1", "--d", "3", "--m", "2"}).code, 2);
  EXPECT_EQ(run_cli({"check", "--n", "5", "--K", "x", "--d", "3", "--m", "2"}).code, 2);
  EXPECT_EQ(run_cli({"check", "--n", "5", "--K", "0", "--d", "3", "--m", "2"}).code, 2);
}

TEST(CliApprox, AppendsDecimal) {
  const auto r = run_cli({"--approx", "bound", "--file", sample("witness_n4_d3_m2.json")});
  EXPECT_NE(r.out.find("bound: K <= 32/25 (~1.28)"), std::string::npos);
  const auto j = json::parse(
      run_cli({"check", "--n", "10", "--K", "2", "--d", "5", "--m", "2", "--format", "json", "--approx"}).out);
  EXPECT_EQ(j["hamming"]["rhs"], "256/109");
  EXPECT_EQ(j["hamming"]["rhs_approx"].get<std::string>().substr(0, 6), "2.3486");
}

TEST(CliDeterminism, ByteIdenticalOutput) {
  const std::vector<std::string> args{"threshold", "--d", "7", "--m", "2", "--horizon", "50", "--format", "csv"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

}  // namespace
}  // namespace qhb::cli
