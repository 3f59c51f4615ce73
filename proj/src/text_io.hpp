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

#include <sstream>
#include <string>
#include <vector>

#include "srig/error.hpp"

namespace srig::detail {

// Line-oriented reader shared by the text formats. Blank lines and lines
// starting with '#' are skipped.
class LineReader {
 public:
  explicit LineReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      lines_.push_back({number, line});
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  const std::string& peek() const { return lines_.at(pos_).text; }
  int line_number() const { return done() ? -1 : lines_[pos_].number; }

  std::vector<std::string> next_tokens() {
    if (done()) throw ParseError("unexpected end of input");
    std::istringstream in(lines_[pos_++].text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const {
    int n = pos_ == 0 ? 0 : lines_[pos_ - 1].number;
    throw ParseError("line " + std::to_string(n) + ": " + message);
  }

 private:
  struct Line {
    int number;
    std::string text;
  };
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

inline long long parse_integer(const std::string& token, const LineReader& reader) {
  if (token.empty()) reader.fail("empty integer");
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    reader.fail("bad integer '" + token + "'");
  }
  if (used != token.size()) reader.fail("bad integer '" + token + "'");
  return value;
}

}  // namespace srig::detail
