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

#ifndef SEMLAB_GRAPH_H_
#define SEMLAB_GRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semlab {

// An unordered vertex pair. Endpoints are kept in the order they were given.
struct Edge {
  int u = 0;
  int v = 0;

  bool Joins(int a, int b) const {
    return (u == a && v == b) || (u == b && v == a);
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Thrown when textual graph input (edge list, graph6, generator arguments)
// cannot be decoded.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite simple graph on vertices 0..order()-1.
//
// Construction validates that there are no loops, no repeated edges and no
// out-of-range endpoints; a Graph is immutable afterwards and can be shared
// freely between threads.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument if the edge list violates simplicity.
  Graph(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int a, int b) const;

  // Index into edges() of the edge joining a and b.
  std::optional<std::size_t> FindEdge(int a, int b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Vertex degrees sorted in non-increasing order.
using DegreeSequence = std::vector<int>;

DegreeSequence degree_sequence(const Graph& g);

// Glues cycles together at cut vertices. Cycle 0 is laid down first; every
// later cycle i is attached to an earlier one by identifying its first
// vertex with position `position` (0-based, along the cycle) of cycle
// `parent`. Several cycles may share the same cut vertex.
struct CactusSpec {
  struct Attachment {
    int parent = 0;
    int position = 0;
  };
  std::vector<int> cycle_lengths;
  // attachments[i] places cycle i + 1.
  std::vector<Attachment> attachments;
};

Graph make_cycle(int n);
// C(m, n): an m-cycle and an n-cycle sharing vertex 0.
Graph make_two_cycle(int m, int n);
Graph make_cactus(const CactusSpec& spec);
Graph disjoint_union(const Graph& a, const Graph& b);

// One realization of the degree sequence 4,2,...,2: C(m, n) together with
// extra disjoint cycles.
struct Degseq42Realization {
  int m = 0;
  int n = 0;
  std::vector<int> extra_cycles;  // non-decreasing, each >= 3

  Graph Build() const;
  std::string Name() const;  // e.g. "C(3,3)+C3"
};

// Every graph of the given order whose degree sequence is 4,2,...,2, one per
// isomorphism class. With a single vertex of degree 4 and the rest of degree
// 2, the component through the degree-4 vertex is always some C(m, n) and the
// remaining components are cycles, so the classes are enumerated directly.
std::vector<Degseq42Realization> degseq_4_2_realizations(int order);

enum class GraphFormat { kEdgeList, kGraph6 };

// Throws ParseError on malformed input or simplicity violations.
Graph parse_graph(std::string_view text, GraphFormat format);
// Picks graph6 unless the first meaningful character is a digit or '#'.
Graph parse_graph_auto(std::string_view text);

std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g);

}  // namespace semlab

#endif  // SEMLAB_GRAPH_H_
