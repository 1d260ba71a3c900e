// Copyright 2026 The orliczkit Authors
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

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orliczkit/io.hpp"

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(ORLICZKIT_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "orliczkit-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("young").status, 1);
  EXPECT_EQ(run("young show --young cosine:1").status, 1);
  EXPECT_EQ(run("target first --young power:2 --n 1").status, 1);
  EXPECT_EQ(run("boyd index --format csv").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, TargetFirstWritesYf1) {
  const CliRun r = run("target first --young power:2 --n 3");
  ASSERT_EQ(r.status, 0);
  std::istringstream is(r.out);
  const auto t = orliczkit::read_yf1(is);
  EXPECT_NEAR(t.tail().exponent, 6.0, 0.06);
}

TEST(Cli, YoungFromFile) {
  const auto path = scratch("conj.yf1");
  ASSERT_EQ(run("young conjugate --young power:3 --out " + path.string()).status, 0);
  const CliRun r = run("young invert --young " + path.string() + " --r 1");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  // Conjugate of s^3 is (2 / 3^{3/2}) t^{3/2}.
  EXPECT_NEAR(j["value"].get<double>(), std::pow(1.5 * std::sqrt(3.0), 2.0 / 3.0), 1e-4);
}

TEST(Cli, BoydIndex) {
  const CliRun r = run("boyd index --young power:2");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["estimate"]["index"].get<double>(), 2.0, 0.04);
  EXPECT_EQ(j["seed"], 1);
}

TEST(Cli, BoydCheckExitCodes) {
  EXPECT_EQ(run("boyd check --young power:2 --alpha 0.2").status, 0);
  EXPECT_EQ(run("boyd check --young power:3 --alpha 0.6").status, 2);
}

TEST(Cli, DomainDensityCube) {
  const CliRun r = run("domain density --gen cube --h 0.00390625");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["report"]["inf"].get<double>(), std::numbers::pi / 4.0, 0.02);
  EXPECT_EQ(run("domain density --gen inward-cusp --h 0.00390625").status, 2);
}

TEST(Cli, DomainGenRoundTrip) {
  const auto path = scratch("carpet.ord1");
  ASSERT_EQ(run("domain gen --gen fat-carpet --h 0.0078125 --out " + path.string()).status, 0);
  const std::string text = slurp(path);
  EXPECT_EQ(text.rfind("ORD1 2 0.0078125 128 128\n", 0), 0u);
  const CliRun halve = run("domain halve --domain " + path.string() + " --x 0.5,0.1 --R 0.3");
  ASSERT_EQ(halve.status, 0);
  EXPECT_TRUE(nlohmann::json::parse(halve.out)["within_tolerance"].get<bool>());
}

TEST(Cli, NormAndRatioCheck) {
  const CliRun lux = run("norm lux --gen cube --side 0.5 --h 0.0078125 --young power:2");
  ASSERT_EQ(lux.status, 0);
  const auto j = nlohmann::json::parse(lux.out);
  EXPECT_NEAR(j["norm"].get<double>(), 0.5, 1e-5);
  EXPECT_EQ(run("verify ratio-lemma --young power:2 --n 3").status, 0);
  EXPECT_EQ(run("verify ratio-lemma --young power:2 --n 5 --m 2").status, 0);
}

TEST(Cli, HarnessDeterministicAcrossWorkers) {
  const std::string args = "harness run --gen cube --h 0.015625 --young power:2 --centers 3 --radii 0.2,0.4 --seed 9";
  const CliRun a = run(args + " --workers 1");
  const CliRun b = run(args + " --workers 3");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["seed"], 9);
  EXPECT_EQ(j["reports"].size(), 6u);
  const CliRun csv = run(args + " --format csv");
  EXPECT_EQ(csv.out.rfind("verdict,radius,step,", 0), 0u);
}
