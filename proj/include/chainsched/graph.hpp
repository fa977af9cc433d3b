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
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chainsched/errors.hpp"
#include "chainsched/json_io.hpp"

namespace chainsched {

using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;  // sorted ascending

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges = {}) : n_(n), adjacency_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_)
      throw InvalidParameter("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    if (u == v) throw InvalidParameter("self-loop at vertex " + std::to_string(u));
    if (adjacency_[u].count(v)) throw InvalidParameter("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    edges_.push_back({u, v});
  }

  std::size_t vertex_count() const { return n_; }
  // Edges in insertion order, endpoints as given.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).count(v) > 0; }
  const std::set<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

  // v together with its neighbours.
  VertexSet closed_neighborhood(Vertex v) const {
    VertexSet out(adjacency_.at(v).begin(), adjacency_.at(v).end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::set<Vertex>> adjacency_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

inline bool is_independent(const Graph& g, const VertexSet& set) {
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (set[a] == set[b] || g.adjacent(set[a], set[b])) return false;
  return true;
}

// |N[v] ∩ set| for every v.
inline std::vector<std::size_t> domination_counts(const Graph& g, const VertexSet& set) {
  std::vector<std::size_t> count(g.vertex_count(), 0);
  for (Vertex u : set)
    for (Vertex v : g.closed_neighborhood(u)) ++count[v];
  return count;
}

// Graph document: {"n": n, "edges": [[u, v], ...]}. Reductions producing a
// graph problem add "k" (and "r" for threshold domination) alongside.
struct GraphProblem {
  Graph graph;
  std::optional<std::size_t> k;
  std::optional<std::size_t> r;
};

inline GraphProblem parse_graph(std::string_view text) {
  using namespace json_io;
  const auto doc = parse_document(text);
  reject_unknown(doc, {"n", "edges", "k", "r"}, "graph");
  const auto n = static_cast<std::size_t>(integer(field(doc, "n", "graph"), "graph.n"));
  GraphProblem out{Graph(n), std::nullopt, std::nullopt};
  const auto& edges = array(field(doc, "edges", "graph"), "graph.edges");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "graph.edges[" + std::to_string(e) + "]";
    if (!edges[e].is_array() || edges[e].size() != 2) throw ParseError(where + ": expected [u, v]");
    const auto u = static_cast<Vertex>(integer(edges[e][0], where + "[0]"));
    const auto v = static_cast<Vertex>(integer(edges[e][1], where + "[1]"));
    try {
      out.graph.add_edge(u, v);
    } catch (const InvalidParameter& ex) {
      throw ParseError(where + ": " + ex.what());
    }
  }
  if (doc.contains("k")) out.k = static_cast<std::size_t>(integer(doc["k"], "graph.k"));
  if (doc.contains("r")) out.r = static_cast<std::size_t>(integer(doc["r"], "graph.r"));
  return out;
}

inline std::string serialize_graph(const Graph& g, std::optional<std::size_t> k = std::nullopt,
                                   std::optional<std::size_t> r = std::nullopt) {
  json_io::ordered_json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = json_io::ordered_json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  if (k) doc["k"] = *k;
  if (r) doc["r"] = *r;
  return doc.dump();
}

}  // namespace chainsched
