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

#include "support/corpus.h"

#include <algorithm>
#include <limits>
#include <numeric>

namespace semlab::testing {

Graph random_graph(std::mt19937_64& rng, int order, int size) {
  std::vector<Edge> pairs;
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) pairs.push_back({u, v});
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min<std::size_t>(pairs.size(), size));
  return Graph(order, std::move(pairs));
}

CactusSpec random_cactus_spec(std::mt19937_64& rng, int max_order) {
  CactusSpec spec;
  spec.cycle_lengths.push_back(
      std::uniform_int_distribution<int>(3, max_order)(rng));
  int order = spec.cycle_lengths.front();
  std::bernoulli_distribution another(0.7);
  // A new cycle of length L adds L - 1 vertices.
  while (max_order - order >= 2 && another(rng)) {
    const int len =
        std::uniform_int_distribution<int>(3, max_order - order + 1)(rng);
    const int parent = std::uniform_int_distribution<int>(
        0, static_cast<int>(spec.cycle_lengths.size()) - 1)(rng);
    const int position = std::uniform_int_distribution<int>(
        0, spec.cycle_lengths[parent] - 1)(rng);
    spec.attachments.push_back({parent, position});
    spec.cycle_lengths.push_back(len);
    order += len - 1;
  }
  return spec;
}

std::vector<NamedGraph> small_corpus(const CorpusOptions& options) {
  std::vector<NamedGraph> corpus;
  for (int n = 3; n <= options.max_order; ++n) {
    corpus.push_back({"C" + std::to_string(n), make_cycle(n)});
  }
  for (int m = 3; m <= options.max_order; ++m) {
    for (int n = 3; m + n - 1 <= options.max_order; ++n) {
      corpus.push_back({"C(" + std::to_string(m) + "," + std::to_string(n) + ")",
                        make_two_cycle(m, n)});
    }
  }
  std::mt19937_64 rng(options.seed);
  for (int i = 0; i < options.random_cacti; ++i) {
    const CactusSpec spec = random_cactus_spec(rng, options.max_order);
    std::string name = "cactus";
    for (int len : spec.cycle_lengths) name += "-" + std::to_string(len);
    corpus.push_back({name + "#" + std::to_string(i), make_cactus(spec)});
  }
  for (int i = 0; i < options.random_graphs; ++i) {
    const int p = std::uniform_int_distribution<int>(2, options.max_order)(rng);
    const int max_q = std::min(p * (p - 1) / 2, 2 * p - 1);
    const int q = std::uniform_int_distribution<int>(0, max_q)(rng);
    corpus.push_back({"random-p" + std::to_string(p) + "-q" +
                          std::to_string(q) + "#" + std::to_string(i),
                      random_graph(rng, p, q)});
  }
  return corpus;
}

void for_each_bijection(
    int order, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> labels(order);
  std::iota(labels.begin(), labels.end(), 1);
  do {
    visit(labels);
  } while (std::next_permutation(labels.begin(), labels.end()));
}

bool brute_extendable(const Graph& g, const std::vector<int>& labels) {
  std::set<int> sums;
  for (const Edge& e : g.edges()) sums.insert(labels[e.u] + labels[e.v]);
  if (static_cast<int>(sums.size()) != g.size()) return false;
  return sums.empty() || *sums.rbegin() - *sums.begin() == g.size() - 1;
}

std::pair<std::int64_t, std::int64_t> brute_weighted_extremes(const Graph& g) {
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for_each_bijection(g.order(), [&](const std::vector<int>& labels) {
    std::int64_t total = 0;
    for (int v = 0; v < g.order(); ++v) total += g.degree(v) * labels[v];
    lo = std::min(lo, total);
    hi = std::max(hi, total);
  });
  return {lo, hi};
}

std::set<std::int64_t> brute_valences(const Graph& g) {
  std::set<std::int64_t> valences;
  for_each_bijection(g.order(), [&](const std::vector<int>& labels) {
    if (!brute_extendable(g, labels)) return;
    int min_sum = 2 * g.order();
    for (const Edge& e : g.edges()) {
      min_sum = std::min(min_sum, labels[e.u] + labels[e.v]);
    }
    valences.insert(g.order() + g.size() + min_sum);
  });
  return valences;
}

std::optional<std::vector<int>> brute_least_witness(
    const Graph& g, const std::vector<int>& order) {
  std::optional<std::vector<int>> best;
  std::optional<std::vector<int>> best_key;
  for_each_bijection(g.order(), [&](const std::vector<int>& labels) {
    if (!brute_extendable(g, labels)) return;
    std::vector<int> key;
    for (int v : order) key.push_back(labels[v]);
    if (!best_key || key < *best_key) {
      best_key = key;
      best = labels;
    }
  });
  return best;
}

}  // namespace semlab::testing
