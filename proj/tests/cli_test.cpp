// Copyright 2026 The srig Authors
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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = std::string(SRIG_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string path;
  if (!stdin_text.empty()) {
    path = testing::TempDir() + "srig_cli_input.txt";
    std::ofstream(path) << stdin_text;
    cmd += " < " + path;
  }
  CliRun result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

constexpr const char* kTriangle = "graph 3 3\n0 1\n1 2\n0 2\n";
constexpr const char* kRegions =
    "graph 5 4\n0 1\n1 2\n2 3\n3 4\nregion 0: 0 1\nregion 1: 1 2 3\nregion 2: 3 4\n";

TEST(CliTest, DensityOfTriangle) {
  CliRun r = run("density --input -", kTriangle);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("max_density = 1\n"), std::string::npos) << r.out;
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("density").code, 2);
  EXPECT_EQ(run("density --input /nonexistent/file").code, 2);
  EXPECT_EQ(run("density --input -", "graph 2 1\n0 5\n").code, 2);
  EXPECT_EQ(run("scol --r 1 --cap 2 --input -", kTriangle).code, 2);
  EXPECT_EQ(run("sample --r 1 --input -", kRegions).code, 2);
}

TEST(CliTest, CheckFailureExitCode) {
  CliRun r = run("lowerbound --d 2 --r 1");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("model_valid = false"), std::string::npos);
}

TEST(CliTest, BoundsPass) {
  CliRun r = run("bounds --d 3 --r 2 --t 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= "), std::string::npos);
}

TEST(CliTest, PipelineIsDeterministic) {
  CliRun a = run("pipeline --r 1 --seed 9 --trials 4 --input -", kRegions);
  CliRun b = run("pipeline --r 1 --seed 9 --trials 4 --input -", kRegions);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("verdict = pass"), std::string::npos) << a.out;
}

TEST(CliTest, WritesOutputFile) {
  std::string path = testing::TempDir() + "srig_cli_out.txt";
  CliRun r = run("density --input - --output " + path, kTriangle);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("max_density = 1"), std::string::npos);
}

TEST(CliTest, Version) {
  CliRun r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.out.empty());
}

}  // namespace
