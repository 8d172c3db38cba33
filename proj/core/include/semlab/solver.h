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

#ifndef SEMLAB_SOLVER_H_
#define SEMLAB_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "semlab/graph.h"
#include "semlab/labeling.h"
#include "semlab/obstruction.h"

namespace semlab {

// The integers between ceil(min S_G) and floor(max S_G), where S_G is the
// set of valences (sum deg(v) g(v) + sum of edge labels) / q over all vertex
// bijections g. Any super edge-magic valence lies in here.
struct ValenceInterval {
  Rational min_value;
  Rational max_value;
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return lo > hi; }
  bool contains(std::int64_t k) const { return lo <= k && k <= hi; }
  std::vector<std::int64_t> values() const;
};

// Minimum and maximum of sum_v degree(v) * g(v) over bijections g onto
// 1..p: largest degrees take the smallest labels for the minimum and the
// largest labels for the maximum.
std::pair<std::int64_t, std::int64_t> rearrangement_extremes(
    const DegreeSequence& degrees);

// Throws std::invalid_argument for edgeless graphs.
ValenceInterval sem_interval(const Graph& g);

struct SearchConfig {
  bool use_obstructions = true;
  // Restrict the first search vertex to labels 1..ceil(p/2); the complement
  // labeling covers the rest.
  bool symmetry_reduction = true;
  // Limit on search tree nodes (label assignments).
  std::uint64_t budget = 1'000'000'000;
  // 0 picks std::thread::hardware_concurrency().
  int threads = 0;
  // Pin the first search vertex to this label and search only that part of
  // the space. Disables symmetry reduction.
  std::optional<int> anchor_label;
};

enum class SearchStatus {
  kSem,
  kNotSemExhausted,
  kNotSemObstruction,
  kUnknownBudgetExceeded,
  kTrivialEdgeless,
};

std::string_view to_string(SearchStatus status);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t labelings = 0;
  double millis = 0.0;
  int threads = 1;
  int tasks = 0;
  // Vertex searched first and the labels it was given.
  int anchor_vertex = -1;
  std::vector<int> anchor_labels;
  // anchor_labels plus their complements when symmetry reduction is on;
  // 1..p means the whole bijection space is accounted for.
  std::vector<int> covered_anchor_labels;

  bool full_coverage(int order) const;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kUnknownBudgetExceeded;
  std::optional<SemLabeling> witness;
  std::optional<ObstructionVerdict> obstruction;
  SearchStats stats;
  SearchConfig config;

  bool is_sem() const {
    return status == SearchStatus::kSem ||
           status == SearchStatus::kTrivialEdgeless;
  }
  bool is_not_sem() const {
    return status == SearchStatus::kNotSemExhausted ||
           status == SearchStatus::kNotSemObstruction;
  }
};

// Decides whether g is super edge-magic. A witness, when found, is the least
// extendable labeling in lexicographic order of (label of search_order()[0],
// label of search_order()[1], ...), independent of thread count.
SearchOutcome search_sem(const Graph& g, const SearchConfig& config = {});

struct ValenceSet {
  std::vector<std::int64_t> valences;  // sorted, distinct
  bool partial = false;                // budget ran out
  SearchStats stats;
};

// Every valence of a super edge-magic labeling of g. Obstructions in config
// are ignored. Throws std::invalid_argument for edgeless graphs.
ValenceSet sem_set(const Graph& g, const SearchConfig& config = {});

enum class Perfection { kPerfect, kNotPerfect, kVacuousNotSem, kUnknown };

std::string_view to_string(Perfection perfection);

struct PerfectionReport {
  Perfection verdict = Perfection::kUnknown;
  ValenceInterval interval;
  ValenceSet valences;
};

// Compares the valence interval with the realized valence set.
PerfectionReport is_perfect_sem(const Graph& g, const SearchConfig& config = {});

// Fixes one vertex's label in the oracle's enumeration.
struct OraclePin {
  int vertex = 0;
  int label = 1;
};

inline constexpr int kOracleMaxFreeVertices = 10;

// Plain enumeration of every vertex bijection with no pruning and no
// symmetry reduction. Throws std::invalid_argument when more than
// kOracleMaxFreeVertices vertices are free.
SearchOutcome oracle_search(const Graph& g,
                            std::optional<OraclePin> pin = std::nullopt);
std::vector<std::int64_t> oracle_sem_set(
    const Graph& g, std::optional<OraclePin> pin = std::nullopt);

}  // namespace semlab

#endif  // SEMLAB_SOLVER_H_
