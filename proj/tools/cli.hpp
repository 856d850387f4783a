// Copyright 2026 The cyclomat Authors
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

// Text format, one record per line, vertices numbered from 1:
//
//   n 3            # order, exactly once and first
//   c 1 -1         # charge of vertex 1
//   e 1 2 1 4      # a(1,2) = 1, a(2,1) = 4
//
// Blank lines and everything after '#' are ignored.

#ifndef CYCLOMAT_TOOLS_CLI_HPP_
#define CYCLOMAT_TOOLS_CLI_HPP_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclomat/digraph.hpp"

namespace cyclomat::cli {

struct EdgeRecord {
  std::size_t i = 0;
  std::size_t j = 0;
  Entry aij = 0;
  Entry aji = 0;
  bool operator==(const EdgeRecord&) const = default;
};

struct DigraphDocument {
  std::size_t n = 1;
  std::map<std::size_t, Entry> charges;
  std::vector<EdgeRecord> edges;

  // Records only the nonzero charges and pairs.
  static DigraphDocument FromDigraph(const Digraph& g);
  Digraph to_digraph() const;
  bool operator==(const DigraphDocument&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

DigraphDocument parse(std::string_view text);
std::string emit(const DigraphDocument& doc);

struct Outcome {
  int status = 0;  // 0 success or pass, 1 mismatch, 2 usage or parse error
  std::string out;
  std::string err;
};

// args excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace cyclomat::cli

#endif  // CYCLOMAT_TOOLS_CLI_HPP_
