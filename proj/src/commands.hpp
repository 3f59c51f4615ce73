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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace srig::detail {

struct CommandOptions {
  std::optional<int> r;
  std::optional<int> d;
  std::optional<int> g;
  std::optional<std::string> t;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> cap;
  int jobs = 1;
};

struct CommandResult {
  std::string text;
  bool passed = true;
};

/// Throws InvalidArgument for bad or missing flags.
CommandResult run_command(const std::string& name, const std::string* input, const CommandOptions& options);

bool is_known_command(const std::string& name);

}  // namespace srig::detail
