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

#include "semlab/search_state.h"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace semlab {

std::vector<int> search_order(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

PartialLabeling::PartialLabeling(const Graph& g)
    : PartialLabeling(g, search_order(g)) {}

PartialLabeling::PartialLabeling(const Graph& g, std::vector<int> order)
    : graph_(&g), p_(g.order()), q_(g.size()), order_(std::move(order)) {
  if (order_size() != p_) {
    throw std::invalid_argument("search order must list every vertex");
  }
  position_.assign(p_, -1);
  for (int i = 0; i < p_; ++i) {
    const int v = order_[i];
    if (v < 0 || v >= p_ || position_[v] != -1) {
      throw std::invalid_argument("search order is not a permutation");
    }
    position_[v] = i;
  }
  back_.resize(p_);
  last_neighbor_pos_.assign(p_, -1);
  edges_within_suffix_.assign(p_ + 1, 0);
  for (const Edge& e : g.edges()) {
    const int pu = position_[e.u];
    const int pv = position_[e.v];
    if (pu < pv) {
      back_[pv].push_back(e.u);
    } else {
      back_[pu].push_back(e.v);
    }
    last_neighbor_pos_[e.u] = std::max(last_neighbor_pos_[e.u], pv);
    last_neighbor_pos_[e.v] = std::max(last_neighbor_pos_[e.v], pu);
    ++edges_within_suffix_[std::min(pu, pv)];
  }
  for (int i = p_ - 1; i >= 0; --i) {
    edges_within_suffix_[i] += edges_within_suffix_[i + 1];
  }
  labels_.assign(p_, 0);
  used_.assign(p_ + 1, false);
  sum_count_.assign(2 * p_ + 1, 0);
  undo_.reserve(p_);
}

bool PartialLabeling::Push(int label) {
  const int v = order_[depth_];
  undo_.push_back({min_sum_, max_sum_});
  labels_[v] = label;
  used_[label] = true;
  for (int w : back_[depth_]) {
    const int sum = label + labels_[w];
    if (++sum_count_[sum] == 2) ++repeats_;
    if (placed_ == 0) {
      min_sum_ = max_sum_ = sum;
    } else {
      min_sum_ = std::min(min_sum_, sum);
      max_sum_ = std::max(max_sum_, sum);
    }
    ++placed_;
  }
  ++depth_;
  return Viable();
}

void PartialLabeling::Pop() {
  --depth_;
  const int v = order_[depth_];
  const int label = labels_[v];
  for (int w : back_[depth_]) {
    const int sum = label + labels_[w];
    if (sum_count_[sum]-- == 2) --repeats_;
    --placed_;
  }
  labels_[v] = 0;
  used_[label] = false;
  min_sum_ = undo_.back().min_sum;
  max_sum_ = undo_.back().max_sum;
  undo_.pop_back();
}

bool PartialLabeling::Consistent() const {
  if (repeats_ > 0) return false;
  return placed_ == 0 || max_sum_ - min_sum_ <= q_ - 1;
}

bool PartialLabeling::WindowFeasible() const {
  if (placed_ == q_) return true;

  // Sums a remaining edge could still take.
  std::vector<bool> reachable(2 * p_ + 1, false);
  std::vector<int> unused;
  unused.reserve(p_ - depth_);
  for (int label = 1; label <= p_; ++label) {
    if (!used_[label]) unused.push_back(label);
  }
  for (int i = 0; i < depth_; ++i) {
    const int v = order_[i];
    if (last_neighbor_pos_[v] < depth_) continue;
    for (int label : unused) reachable[labels_[v] + label] = true;
  }
  if (edges_within_suffix_[depth_] > 0) {
    for (std::size_t i = 0; i < unused.size(); ++i) {
      for (std::size_t j = i + 1; j < unused.size(); ++j) {
        reachable[unused[i] + unused[j]] = true;
      }
    }
  }

  // The final window [s, s + q - 1] lies within [3, 2p - 1] and covers the
  // placed sums.
  int s_lo = 3;
  int s_hi = 2 * p_ - q_;
  if (placed_ > 0) {
    s_lo = std::max(s_lo, max_sum_ - q_ + 1);
    s_hi = std::min(s_hi, min_sum_);
  }
  if (s_lo > s_hi) return false;

  // blocked_prefix[x] counts values below x that are neither placed nor
  // reachable.
  const int top = s_hi + q_;
  std::vector<int> blocked_prefix(top + 1, 0);
  for (int x = 0; x < top; ++x) {
    const bool ok = x < static_cast<int>(reachable.size()) &&
                    (reachable[x] || sum_count_[x] > 0);
    blocked_prefix[x + 1] = blocked_prefix[x] + (ok ? 0 : 1);
  }
  for (int s = s_lo; s <= s_hi; ++s) {
    if (blocked_prefix[s + q_] == blocked_prefix[s]) return true;
  }
  return false;
}

}  // namespace semlab
