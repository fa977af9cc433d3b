// Copyright 2026 The chainsched Authors
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

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chainsched/errors.hpp"

namespace chainsched {

struct Literal {
  std::size_t var = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

// Variables are 0-indexed here and 1-indexed in DIMACS text.
struct CnfFormula {
  std::size_t variable_count = 0;
  std::vector<Clause> clauses;

  bool satisfied_by(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
      bool sat = false;
      for (const auto& lit : clause) sat = sat || (assignment.at(lit.var) != lit.negated);
      if (!sat) return false;
    }
    return true;
  }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Standard DIMACS cnf. `comments` are emitted as "c ..." lines before the header.
inline std::string write_dimacs(const CnfFormula& f, const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (const auto& lit : clause) out << (lit.negated ? "-" : "") << lit.var + 1 << ' ';
    out << "0\n";
  }
  return out.str();
}

inline CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> declared_clauses;
  CnfFormula f;
  Clause current;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok) || tok == "c" || tok[0] == 'c' || tok == "%") continue;
    if (tok == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (!(tokens >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0)
        throw ParseError("line " + std::to_string(line_no) + ": malformed problem line");
      if (declared_clauses) throw ParseError("line " + std::to_string(line_no) + ": duplicate problem line");
      f.variable_count = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!declared_clauses) throw ParseError("line " + std::to_string(line_no) + ": clause before problem line");
    do {
      char* end = nullptr;
      const long long v = std::strtoll(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0')
        throw ParseError("line " + std::to_string(line_no) + ": bad literal \"" + tok + "\"");
      if (v == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(v < 0 ? -v : v);
      if (var > f.variable_count)
        throw ParseError("line " + std::to_string(line_no) + ": variable " + std::to_string(var) + " out of range");
      current.push_back({var - 1, v < 0});
    } while (tokens >> tok);
  }
  if (!declared_clauses) throw ParseError("missing problem line");
  if (!current.empty()) throw ParseError("last clause not terminated by 0");
  if (f.clauses.size() != *declared_clauses)
    throw ParseError("declared " + std::to_string(*declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  return f;
}

}  // namespace chainsched
