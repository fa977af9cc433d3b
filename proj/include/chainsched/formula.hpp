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

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chainsched/errors.hpp"
#include "chainsched/json_io.hpp"

namespace chainsched {

// Node of an AND/OR tree over literals.
struct FormulaNode {
  enum class Kind { And, Or, Literal };

  Kind kind = Kind::Literal;
  std::size_t var = 0;  // Literal only
  bool negated = false;  // Literal only
  std::vector<FormulaNode> children;  // And/Or only

  static FormulaNode literal(std::size_t var, bool negated = false) { return {Kind::Literal, var, negated, {}}; }
  static FormulaNode all_of(std::vector<FormulaNode> c) { return {Kind::And, 0, false, std::move(c)}; }
  static FormulaNode any_of(std::vector<FormulaNode> c) { return {Kind::Or, 0, false, std::move(c)}; }

  bool is_literal() const { return kind == Kind::Literal; }

  friend bool operator==(const FormulaNode&, const FormulaNode&) = default;
};

struct NormalizedFormula {
  std::size_t variable_count = 0;
  FormulaNode root;

  NormalizedFormula() = default;
  NormalizedFormula(std::size_t n, FormulaNode r) : variable_count(n), root(std::move(r)) { validate(root); }

  friend bool operator==(const NormalizedFormula&, const NormalizedFormula&) = default;

 private:
  void validate(const FormulaNode& node) const {
    if (node.is_literal()) {
      if (node.var >= variable_count)
        throw InvalidParameter("literal references variable " + std::to_string(node.var) + " of " +
                               std::to_string(variable_count));
      return;
    }
    if (node.children.empty()) throw InvalidParameter("AND/OR node without children");
    for (const auto& c : node.children) validate(c);
  }
};

inline bool eval_node(const FormulaNode& node, const std::vector<bool>& assignment) {
  switch (node.kind) {
    case FormulaNode::Kind::Literal:
      return assignment.at(node.var) != node.negated;
    case FormulaNode::Kind::And:
      return std::all_of(node.children.begin(), node.children.end(),
                         [&](const FormulaNode& c) { return eval_node(c, assignment); });
    case FormulaNode::Kind::Or:
      return std::any_of(node.children.begin(), node.children.end(),
                         [&](const FormulaNode& c) { return eval_node(c, assignment); });
  }
  return false;
}

inline bool eval_normalized(const NormalizedFormula& f, const std::vector<bool>& assignment) {
  return eval_node(f.root, assignment);
}

// Largest number of OR nodes on a root-to-leaf path.
inline std::size_t disjunction_depth(const FormulaNode& node) {
  std::size_t below = 0;
  for (const auto& c : node.children) below = std::max(below, disjunction_depth(c));
  return below + (node.kind == FormulaNode::Kind::Or ? 1 : 0);
}

inline std::size_t literal_count(const FormulaNode& node) {
  if (node.is_literal()) return 1;
  std::size_t n = 0;
  for (const auto& c : node.children) n += literal_count(c);
  return n;
}

inline bool has_negative_literal(const FormulaNode& node) {
  if (node.is_literal()) return node.negated;
  return std::any_of(node.children.begin(), node.children.end(), [](const FormulaNode& c) { return has_negative_literal(c); });
}

// Formula document: nested {"and": [...]}, {"or": [...]}, {"var": i, "neg": b}.
// Either the bare root node (variable count = largest index + 1) or
// {"variables": n, "formula": <node>} when trailing variables never occur.
inline FormulaNode node_from_json(const json_io::json& doc, const std::string& where) {
  using namespace json_io;
  if (!doc.is_object()) throw ParseError(where + ": expected an object");
  if (doc.contains("and") || doc.contains("or")) {
    const bool is_and = doc.contains("and");
    reject_unknown(doc, {is_and ? "and" : "or"}, where);
    const auto& list = array(doc[is_and ? "and" : "or"], where);
    std::vector<FormulaNode> children;
    for (std::size_t i = 0; i < list.size(); ++i)
      children.push_back(node_from_json(list[i], where + "." + (is_and ? "and" : "or") + "[" + std::to_string(i) + "]"));
    if (children.empty()) throw ParseError(where + ": empty child list");
    return is_and ? FormulaNode::all_of(std::move(children)) : FormulaNode::any_of(std::move(children));
  }
  reject_unknown(doc, {"var", "neg"}, where);
  const auto var = static_cast<std::size_t>(integer(field(doc, "var", where), where + ".var"));
  bool neg = false;
  if (doc.contains("neg")) {
    if (!doc["neg"].is_boolean()) throw ParseError(where + ".neg: expected a boolean");
    neg = doc["neg"].get<bool>();
  }
  return FormulaNode::literal(var, neg);
}

inline std::size_t max_variable(const FormulaNode& node) {
  std::size_t m = node.is_literal() ? node.var : 0;
  for (const auto& c : node.children) m = std::max(m, max_variable(c));
  return m;
}

inline NormalizedFormula parse_formula(std::string_view text) {
  using namespace json_io;
  const auto doc = parse_document(text);
  try {
    if (doc.is_object() && doc.contains("formula")) {
      reject_unknown(doc, {"variables", "formula"}, "formula");
      const auto n = static_cast<std::size_t>(integer(field(doc, "variables", "formula"), "formula.variables"));
      return NormalizedFormula(n, node_from_json(doc["formula"], "formula.formula"));
    }
    auto root = node_from_json(doc, "formula");
    const std::size_t n = max_variable(root) + 1;
    return NormalizedFormula(n, std::move(root));
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what());
  }
}

inline json_io::ordered_json node_to_json(const FormulaNode& node) {
  json_io::ordered_json out;
  if (node.is_literal()) {
    out["var"] = node.var;
    out["neg"] = node.negated;
    return out;
  }
  auto list = json_io::ordered_json::array();
  for (const auto& c : node.children) list.push_back(node_to_json(c));
  out[node.kind == FormulaNode::Kind::And ? "and" : "or"] = std::move(list);
  return out;
}

inline std::string serialize_formula(const NormalizedFormula& f) {
  json_io::ordered_json doc;
  doc["variables"] = f.variable_count;
  doc["formula"] = node_to_json(f.root);
  return doc.dump();
}

}  // namespace chainsched
