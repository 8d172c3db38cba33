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

// Shared fixtures for the test suites: a reproducible corpus of small graphs
// and brute-force reference computations that never touch the pruned search.

#ifndef SEMLAB_TESTS_SUPPORT_CORPUS_H_
#define SEMLAB_TESTS_SUPPORT_CORPUS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semlab/graph.h"

namespace semlab::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Uniformly random simple graph with `order` vertices and `size` edges.
Graph random_graph(std::mt19937_64& rng, int order, int size);

// Random cactus of cycles with total order <= max_order (max_order >= 3).
CactusSpec random_cactus_spec(std::mt19937_64& rng, int max_order);

struct CorpusOptions {
  int max_order = 8;
  int random_cacti = 150;
  int random_graphs = 350;
  std::uint64_t seed = 20260917;
};

// Cycles 3..max_order, every C(m, n) with m + n - 1 <= max_order, then
// random cacti and random simple graphs, in that order.
std::vector<NamedGraph> small_corpus(const CorpusOptions& options);

// Calls visit on every permutation of 1..p assigned to vertices 0..p-1 in
// std::next_permutation order.
void for_each_bijection(int order,
                        const std::function<void(const std::vector<int>&)>& visit);

// Reference extendability check straight from the definition: the edge sums
// are exactly q distinct consecutive integers.
bool brute_extendable(const Graph& g, const std::vector<int>& labels);

// min/max of sum deg(v) * f(v) over all bijections f.
std::pair<std::int64_t, std::int64_t> brute_weighted_extremes(const Graph& g);

// All valences p + q + min(S) of extendable bijections.
std::set<std::int64_t> brute_valences(const Graph& g);

// Least extendable labeling under lexicographic comparison of
// (f(order[0]), f(order[1]), ...).
std::optional<std::vector<int>> brute_least_witness(const Graph& g,
                                                    const std::vector<int>& order);

}  // namespace semlab::testing

#endif  // SEMLAB_TESTS_SUPPORT_CORPUS_H_
