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

#ifndef SEMLAB_SEARCH_STATE_H_
#define SEMLAB_SEARCH_STATE_H_

#include <span>
#include <vector>

#include "semlab/graph.h"

namespace semlab {

// Vertices by non-increasing degree, ties broken by index.
std::vector<int> search_order(const Graph& g);

// A partial vertex labeling built by assigning labels to vertices in a fixed
// order, with the bookkeeping needed to prune on the way down.
//
// Every edge whose endpoints are both labeled contributes its label sum. A
// state is viable only while
//   (a) no sum repeats,
//   (b) max sum - min sum <= q - 1, and
//   (c) some window of q consecutive values in [3, 2p - 1] contains every
//       placed sum and can have each missing value supplied by a remaining
//       edge, using the labels still unused.
// Each condition is necessary for an extendable completion, so pruning on a
// non-viable state never discards a solution.
class PartialLabeling {
 public:
  explicit PartialLabeling(const Graph& g);
  PartialLabeling(const Graph& g, std::vector<int> order);

  int depth() const { return depth_; }
  bool complete() const { return depth_ == order_size(); }
  std::span<const int> order() const { return order_; }
  int next_vertex() const { return order_[depth_]; }
  bool label_used(int label) const { return used_[label]; }
  // Label of each vertex, 0 while unassigned.
  std::span<const int> labels() const { return labels_; }

  int placed_sums() const { return placed_; }
  int min_sum() const { return min_sum_; }
  int max_sum() const { return max_sum_; }

  // Labels next_vertex() and returns Viable(). The assignment stays in
  // place either way; undo it with Pop().
  bool Push(int label);
  void Pop();

  // Conditions (a) and (b).
  bool Consistent() const;
  // Condition (c).
  bool WindowFeasible() const;
  bool Viable() const { return Consistent() && WindowFeasible(); }

 private:
  struct Undo {
    int min_sum;
    int max_sum;
  };

  int order_size() const { return static_cast<int>(order_.size()); }

  const Graph* graph_;
  int p_;
  int q_;
  std::vector<int> order_;
  std::vector<int> position_;              // vertex -> index in order_
  std::vector<std::vector<int>> back_;     // earlier-ordered neighbours
  std::vector<int> last_neighbor_pos_;     // vertex -> max neighbour position
  std::vector<int> edges_within_suffix_;   // edges among order_[i..]

  std::vector<int> labels_;
  std::vector<bool> used_;
  std::vector<int> sum_count_;
  std::vector<Undo> undo_;
  int depth_ = 0;
  int placed_ = 0;
  int repeats_ = 0;
  int min_sum_ = 0;
  int max_sum_ = 0;
};

}  // namespace semlab

#endif  // SEMLAB_SEARCH_STATE_H_
