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
#include <cstdint>
#include <random>
#include <vector>

#include "chainsched/checked.hpp"
#include "chainsched/formula.hpp"
#include "chainsched/graph.hpp"
#include "chainsched/model.hpp"

namespace chainsched {

struct RandomInstanceParams {
  std::size_t min_chains = 1;
  std::size_t max_chains = 3;
  std::size_t max_jobs = 3;
  Time max_delay = 3;
  std::size_t min_machines = 1;
  std::size_t max_machines = 2;
  DelayMode mode = DelayMode::Exact;
  Time max_release = 6;
  Time max_slack = 4;
  // Keep every deadline within r + n(D+1), the reach of a normalized instance.
  bool cap_windows = true;
};

namespace detail {

template <class T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

}  // namespace detail

// Window lengths are drawn around the chain's minimum duration, so a fair
// share of chains barely fit or do not fit at all.
inline Instance random_instance(std::mt19937_64& rng, const RandomInstanceParams& p) {
  const std::size_t c = detail::uniform(rng, p.min_chains, std::max(p.min_chains, p.max_chains));
  const std::size_t m = detail::uniform(rng, p.min_machines, std::max(p.min_machines, p.max_machines));
  std::vector<Chain> chains(c);
  std::size_t n = 0;
  Time max_delay = 0;
  for (auto& ch : chains) {
    const std::size_t jobs = detail::uniform<std::size_t>(rng, 1, std::max<std::size_t>(1, p.max_jobs));
    n += jobs;
    for (std::size_t j = 1; j < jobs; ++j) {
      ch.delays.push_back(detail::uniform<Time>(rng, 0, p.max_delay));
      max_delay = std::max(max_delay, ch.delays.back());
    }
    ch.release = detail::uniform<Time>(rng, 0, p.max_release);
  }
  const Time reach = checked_mul(static_cast<Time>(n), max_delay + 1);
  for (auto& ch : chains) {
    const Time l = ch.minimum_duration();
    Time len = detail::uniform<Time>(rng, std::max<Time>(1, l - 1), checked_add(l, p.max_slack));
    if (p.cap_windows) len = std::min(len, reach);
    ch.deadline = checked_add(ch.release, len);
  }
  return Instance(m, p.mode, std::move(chains));
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double edge_probability) {
  Graph g(n);
  std::bernoulli_distribution coin(edge_probability);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

struct RandomFormulaParams {
  std::size_t variables = 3;
  std::size_t max_terms = 3;       // children of the root conjunction
  std::size_t max_disjuncts = 3;   // children of each disjunction
  double negative_probability = 0.4;
  // Chance that a root term is a bare literal instead of a disjunction.
  double bare_literal_probability = 0.0;
};

// A conjunction of disjunctions of literals.
inline NormalizedFormula random_formula(std::mt19937_64& rng, const RandomFormulaParams& p) {
  std::bernoulli_distribution negate(p.negative_probability);
  std::bernoulli_distribution bare(p.bare_literal_probability);
  auto literal = [&] {
    return FormulaNode::literal(detail::uniform<std::size_t>(rng, 0, p.variables - 1), negate(rng));
  };
  std::vector<FormulaNode> terms;
  const std::size_t count = detail::uniform<std::size_t>(rng, 1, std::max<std::size_t>(1, p.max_terms));
  for (std::size_t i = 0; i < count; ++i) {
    if (bare(rng)) {
      terms.push_back(literal());
      continue;
    }
    std::vector<FormulaNode> disjuncts;
    const std::size_t q = detail::uniform<std::size_t>(rng, 1, std::max<std::size_t>(1, p.max_disjuncts));
    for (std::size_t j = 0; j < q; ++j) disjuncts.push_back(literal());
    terms.push_back(FormulaNode::any_of(std::move(disjuncts)));
  }
  return NormalizedFormula(p.variables, FormulaNode::all_of(std::move(terms)));
}

}  // namespace chainsched
