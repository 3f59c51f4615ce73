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

#include <stdexcept>
#include <string>

namespace srig {

/// Malformed text input (graph, arrangement, region or model formats).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on an operation's arguments was violated.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// An exact search was asked to run above its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A machine-checked claim of the construction failed. `claim` names it,
/// `witness` carries the offending vertices/arcs.
class ClaimViolation : public std::runtime_error {
 public:
  ClaimViolation(std::string claim, std::string witness)
      : std::runtime_error(claim + ": " + witness),
        claim_(std::move(claim)),
        witness_(std::move(witness)) {}

  const std::string& claim() const noexcept { return claim_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string claim_;
  std::string witness_;
};

}  // namespace srig
