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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "srig/srig.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string input;
  std::string output;
  std::optional<int> r;
  std::optional<int> d;
  std::optional<int> g;
  std::optional<std::string> t;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> cap;
  int jobs = 1;
};

struct Command {
  const char* name;
  const char* help;
  bool input;
  const char* flags;  // subset of "rdgtsTcj"
};

const Command kCommands[] = {
    {"density", "exact maximum density and degeneracy", true, ""},
    {"hakimi", "orientation with indegree at most d", true, "d"},
    {"nabla", "exact nabla_r with a witness model", true, "rcj"},
    {"represent", "paths of a random r-shallow model", true, "rds"},
    {"junctions", "junctions of a random r-shallow model", true, "rds"},
    {"sample", "sampled subgraph densities", true, "rdstT"},
    {"extract", "host models of sampled subgraphs", true, "rdsT"},
    {"lowerbound", "dense shallow clique in a segment arrangement", false, "dr"},
    {"scol", "strong r-colouring number", true, "rc"},
    {"acyclic", "acyclic chromatic number", true, "c"},
    {"inequalities", "colouring inequalities against nabla", true, "rc"},
    {"gapcover", "gap-cover certificate of a degeneracy ordering", true, ""},
    {"bounds", "closed-form density bounds", false, "drgt"},
    {"pipeline", "end-to-end check on a region system", true, "rstTc"},
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

int run(const Command& cmd, const Flags& f) {
  std::optional<std::string> text;
  if (cmd.input) {
    if (f.input.empty()) {
      std::cerr << "error: --input is required\n";
      return kExitUsage;
    }
    if (f.input == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream file(f.input);
      if (!file) {
        std::cerr << "error: cannot read " << f.input << '\n';
        return kExitUsage;
      }
      text = read_all(file);
    }
  }
  srig_options options;
  srig_options_init(&options);
  if (f.r) options.r = *f.r;
  if (f.d) options.d = *f.d;
  if (f.g) options.g = *f.g;
  if (f.t) options.t = f.t->c_str();
  if (f.seed) {
    options.has_seed = 1;
    options.seed = *f.seed;
  }
  if (f.trials) options.trials = *f.trials;
  if (f.cap) options.cap = *f.cap;
  options.jobs = f.jobs;

  srig_report_t* report = nullptr;
  srig_status status = srig_run(cmd.name, text ? text->c_str() : nullptr, &options, &report);
  if (status != SRIG_OK) {
    std::cerr << "error (" << srig_status_name(status) << "): " << srig_last_error() << '\n';
    return status == SRIG_ERR_CHECK_FAILED || status == SRIG_ERR_INTERNAL ? kExitCheckFailed : kExitUsage;
  }
  const bool passed = srig_report_passed(report) != 0;
  std::string body = srig_report_text(report);
  srig_report_free(report);
  if (f.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream file(f.output, std::ios::binary);
    if (!file || !(file << body)) {
      std::cerr << "error: cannot write " << f.output << '\n';
      return kExitUsage;
    }
  }
  return passed ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shallow minors of region intersection graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", srig_version());
  Flags flags;
  std::map<CLI::App*, const Command*> by_app;
  for (const Command& cmd : kCommands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    std::string accepted = cmd.flags;
    auto has = [&](char c) { return accepted.find(c) != std::string::npos; };
    if (cmd.input) sub->add_option("--input", flags.input, "graph, segments or region file ('-' for stdin)");
    sub->add_option("--output", flags.output, "write the report here instead of stdout");
    if (has('r')) sub->add_option("--r", flags.r, "depth")->check(CLI::NonNegativeNumber);
    if (has('d')) sub->add_option("--d", flags.d, "indegree or density parameter")->check(CLI::NonNegativeNumber);
    if (has('g')) sub->add_option("--g", flags.g, "genus")->check(CLI::NonNegativeNumber);
    if (has('t')) sub->add_option("--t", flags.t, "host class density, rational");
    if (has('s')) sub->add_option("--seed", flags.seed, "random seed");
    if (has('T')) sub->add_option("--trials", flags.trials, "sampling trials")->check(CLI::PositiveNumber);
    if (has('c')) sub->add_option("--cap", flags.cap, "exact search cap")->check(CLI::PositiveNumber);
    if (has('j')) sub->add_option("--jobs", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
    by_app[sub] = &cmd;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  for (auto [sub, cmd] : by_app) {
    if (sub->parsed()) return run(*cmd, flags);
  }
  return kExitUsage;
}
