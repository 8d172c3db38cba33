// Copyright 2026 The semlab Authors.
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

#include "semlab/graph.h"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace semlab {

Graph::Graph(int order, std::vector<Edge> edges)
    : order_(order), edges_(std::move(edges)) {
  if (order_ < 0) throw std::invalid_argument("negative order");
  adjacency_.resize(order_);
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= order_ || e.v < 0 || e.v >= order_) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) +
                                  " " + std::to_string(e.v));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
}

bool Graph::adjacent(int a, int b) const {
  const auto& nbrs = adjacency_[a];
  return std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end();
}

std::optional<std::size_t> Graph::FindEdge(int a, int b) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].Joins(a, b)) return i;
  }
  return std::nullopt;
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence degrees(g.order());
  for (int v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle length must be >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph make_two_cycle(int m, int n) {
  if (m < 3 || n < 3) {
    throw std::invalid_argument("two-cycle lengths must both be >= 3");
  }
  return make_cactus({{m, n}, {{0, 0}}});
}

Graph make_cactus(const CactusSpec& spec) {
  const auto& lengths = spec.cycle_lengths;
  if (lengths.empty()) throw std::invalid_argument("cactus needs a cycle");
  if (spec.attachments.size() + 1 != lengths.size()) {
    throw std::invalid_argument(
        "cactus needs exactly one attachment per cycle after the first");
  }
  for (int len : lengths) {
    if (len < 3) throw std::invalid_argument("cycle length must be >= 3");
  }

  // cycle_vertices[i][j] is the graph vertex at position j of cycle i.
  std::vector<std::vector<int>> cycle_vertices;
  std::vector<Edge> edges;
  int next_vertex = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    std::vector<int> vertices;
    vertices.reserve(lengths[i]);
    if (i > 0) {
      const auto& at = spec.attachments[i - 1];
      if (at.parent < 0 || at.parent >= static_cast<int>(i)) {
        throw std::invalid_argument("attachment of cycle " + std::to_string(i) +
                                    " refers to a cycle not yet built");
      }
      if (at.position < 0 || at.position >= lengths[at.parent]) {
        throw std::invalid_argument("attachment of cycle " + std::to_string(i) +
                                    " has position outside its parent cycle");
      }
      vertices.push_back(cycle_vertices[at.parent][at.position]);
    }
    while (static_cast<int>(vertices.size()) < lengths[i]) {
      vertices.push_back(next_vertex++);
    }
    for (int j = 0; j < lengths[i]; ++j) {
      edges.push_back({vertices[j], vertices[(j + 1) % lengths[i]]});
    }
    cycle_vertices.push_back(std::move(vertices));
  }
  return Graph(next_vertex, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) {
    edges.push_back({e.u + a.order(), e.v + a.order()});
  }
  return Graph(a.order() + b.order(), std::move(edges));
}

Graph Degseq42Realization::Build() const {
  Graph g = make_two_cycle(m, n);
  for (int len : extra_cycles) g = disjoint_union(g, make_cycle(len));
  return g;
}

std::string Degseq42Realization::Name() const {
  std::string name = "C(" + std::to_string(m) + "," + std::to_string(n) + ")";
  for (int len : extra_cycles) name += "+C" + std::to_string(len);
  return name;
}

namespace {

// Partitions of `total` into parts >= `min_part`, each listed non-decreasing.
void CyclePartitions(int total, int min_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::max(min_part, 3); part <= total; ++part) {
    if (total - part != 0 && total - part < part) continue;
    current.push_back(part);
    CyclePartitions(total - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Degseq42Realization> degseq_4_2_realizations(int order) {
  std::vector<Degseq42Realization> result;
  for (int m = 3; 2 * m - 1 <= order; ++m) {
    for (int n = m; m + n - 1 <= order; ++n) {
      std::vector<std::vector<int>> partitions;
      std::vector<int> current;
      CyclePartitions(order - (m + n - 1), 3, current, partitions);
      for (auto& extra : partitions) {
        result.push_back({m, n, std::move(extra)});
      }
    }
  }
  return result;
}

}  // namespace semlab
