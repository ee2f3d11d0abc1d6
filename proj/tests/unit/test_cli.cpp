// Copyright 2026 The lusq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "lusq/cli.hpp"
#include "lusq/io.hpp"

namespace lusq {
namespace {

const std::string kFixtures = LUSQ_FIXTURE_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Cli, AnalyzeProductState) {
  const auto r = run({"analyze", kFixtures + "/product_000.json"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["report"]["n_qubits"], 3);
  EXPECT_NEAR(j["report"]["xi_tilde_1"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(j["report"]["xi_1"].get<double>(), 1.0, 1e-9);
  EXPECT_EQ(j["config"]["n_restarts"], 16);
  EXPECT_FALSE(j.contains("timing_ms"));
  EXPECT_EQ(j["input_digest"], content_digest(read_text_file(kFixtures + "/product_000.json")));
}

TEST(Cli, AnalyzeCsv) {
  const auto r = run({"--report", "csv", "analyze", kFixtures + "/product_00.json"});
  ASSERT_EQ(r.code, cli::kSuccess);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].size(), rows[1].size());
}

TEST(Cli, TimingIsOptIn) {
  const auto r = run({"--timing", "analyze", kFixtures + "/product_00.json"});
  ASSERT_EQ(r.code, cli::kSuccess);
  EXPECT_TRUE(nlohmann::json::parse(r.out).contains("timing_ms"));
}

TEST(Cli, ZeroMeanSpinIsUndefined) {
  const auto r = run({"analyze", kFixtures + "/bell.json"});
  ASSERT_EQ(r.code, cli::kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["xi_1"]["undefined"], "zero mean spin");
  EXPECT_EQ(j["report"]["xi_tilde_2"]["undefined"], "zero mean spin");
  EXPECT_NEAR(j["report"]["xi_tilde_1"].get<double>(), 0.0, 1e-6);
}

TEST(Cli, OutputIsByteIdentical) {
  const std::string file = kFixtures + "/c05.json";
  const auto a = run({"--seed", "7", "analyze", file});
  const auto b = run({"--seed", "7", "analyze", file});
  const auto c = run({"--seed", "7", "--threads", "4", "analyze", file});
  ASSERT_EQ(a.code, cli::kSuccess);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, WritesToOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "lusq_cli_test_report.json";
  std::filesystem::remove(path);
  const auto r = run({"--out", path.string(), "analyze", kFixtures + "/product_00.json"});
  ASSERT_EQ(r.code, cli::kSuccess);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(report_from_json(read_text_file(path)).report.n_qubits, 2);
  std::filesystem::remove(path);
}

TEST(Cli, WitnessExitCodes) {
  const auto bell = run({"witness", kFixtures + "/bell.json"});
  EXPECT_EQ(bell.code, cli::kInconclusive);
  EXPECT_EQ(bell.out.rfind("INCONCLUSIVE", 0), 0u);
  EXPECT_NE(bell.out.find("closed form"), std::string::npos);

  const auto c05 = run({"witness", kFixtures + "/c05.json"});
  EXPECT_EQ(c05.code, cli::kSuccess);
  EXPECT_EQ(c05.out.rfind("ENTANGLED", 0), 0u);

  EXPECT_EQ(run({"witness", kFixtures + "/product_00.json"}).code, cli::kInconclusive);
}

TEST(Cli, InvarianceExitCodes) {
  const auto r = run({"invariance", kFixtures + "/c05.json", "--trials", "3"});
  EXPECT_EQ(r.code, cli::kSuccess) << r.out;
  EXPECT_NE(r.out.find("trials=3"), std::string::npos);
  EXPECT_NE(r.out.find(" OK"), std::string::npos);
}

TEST(Cli, ErrorExitCodes) {
  EXPECT_EQ(run({"analyze", kFixtures + "/corrupt.json"}).code, cli::kInputError);
  EXPECT_EQ(run({"analyze", kFixtures + "/wrong_length.json"}).code, cli::kInputError);
  EXPECT_EQ(run({"analyze", kFixtures + "/unnormalized.json"}).code, cli::kInvariantError);
  EXPECT_EQ(run({"analyze", kFixtures + "/negative_weight.json"}).code, cli::kInvariantError);
  EXPECT_EQ(run({"analyze"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"--report", "xml", "analyze", kFixtures + "/product_00.json"}).code, cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({"--help"}).code, cli::kSuccess);
}

TEST(Cli, SweepPsiPrime) {
  const auto r = run({"sweep", "--family", "psi_prime", "--param", "phi", "--from", "0", "--to",
                      "1.5707963267948966", "--steps", "5"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"phi", "xi_1", "xi_2", "xi_tilde_1", "xi_tilde_2",
                                               "concurrence", "j0"}));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double phi = std::stod(rows[k][0]);
    EXPECT_NEAR(std::stod(rows[k][3]), std::sqrt(1.0 - std::abs(std::sin(2 * phi))), 1e-6);
    EXPECT_NEAR(std::stod(rows[k][5]), std::abs(std::sin(2 * phi)), 1e-12);
  }
  // At phi = pi/4 the mean spin vanishes and the collective parameters are undefined.
  EXPECT_EQ(rows[3][1], "undefined:zero mean spin");
  EXPECT_EQ(rows[3][2], "undefined:zero mean spin");
  EXPECT_EQ(rows[3][4], "undefined:zero mean spin");
  EXPECT_NEAR(std::stod(rows[2][1]), std::sqrt(1.0 - std::sin(std::numbers::pi / 4)), 1e-9);
}

TEST(Cli, SweepSchmidtPairFlagsMaximalEntanglement) {
  const auto r = run({"sweep", "--family", "schmidt_pair", "--param", "lambda1_sq", "--from", "0.5",
                      "--to", "1", "--steps", "3"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1][4], "undefined:zero mean spin");
  EXPECT_NEAR(std::stod(rows[3][4]), 1.0, 1e-9);
  const double c = std::stod(rows[2][5]);
  EXPECT_NEAR(std::stod(rows[2][4]), 1.0 / std::sqrt(1.0 + c), 1e-9);
}

TEST(Cli, SweepRejectsBadInput) {
  EXPECT_EQ(run({"sweep", "--family", "psi", "--param", "theta", "--from", "0", "--to", "1",
                 "--steps", "2"})
                .code,
            cli::kInputError);
  EXPECT_EQ(run({"sweep", "--family", "psi", "--param", "phi", "--from", "0", "--to", "1",
                 "--steps", "0"})
                .code,
            cli::kInputError);
  EXPECT_EQ(run({"sweep", "--family", "ghz", "--param", "n", "--from", "2", "--to", "3",
                 "--steps", "2", "--set", "n"})
                .code,
            cli::kInputError);
}

TEST(Cli, BuildFamily) {
  const auto r = run({"build", "--family", "schmidt_pair", "--param", "lambda1_sq=0.25"});
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const auto s = parse_state_json(r.out);
  EXPECT_NEAR(std::norm(s.amplitudes()[0]), 0.25, 1e-15);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["family"]["name"], "schmidt_pair");

  const auto random = run({"--seed", "5", "build", "--family", "pure_random", "--param", "n=3"});
  EXPECT_EQ(nlohmann::json::parse(random.out)["family"]["seed"], 5);
  EXPECT_EQ(run({"build", "--family", "psi", "--param", "phi=abc"}).code, cli::kInputError);
}

}  // namespace
}  // namespace lusq
