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

// Analytic proofs that a graph has no super edge-magic labeling. Every check
// here is sound: a verdict is only returned when the rule's hypotheses hold,
// and an empty result says nothing about the graph.

#ifndef SEMLAB_OBSTRUCTION_H_
#define SEMLAB_OBSTRUCTION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semlab/graph.h"
#include "semlab/labeling.h"

namespace semlab {

enum class ObstructionRule {
  kEvenDegreeSizeMod4,      // EVEN_DEG_Q_MOD4
  kDegseq42EvenOrder,       // DEGSEQ_4_2_EVEN_ORDER
  kValenceIntegrality,      // VALENCE_INTEGRALITY
};

std::string_view to_string(ObstructionRule rule);

struct ObstructionVerdict {
  ObstructionRule rule;
  std::string justification;
  // Named integers the rule relied on, in a stable order.
  std::vector<std::pair<std::string, std::int64_t>> parameters;
};

// All degrees even and q = 2 (mod 4).
std::optional<ObstructionVerdict> check_even_degree_parity(const Graph& g);

// Even order p >= 6 with degree sequence 4,2,...,2. Connectivity is not
// required.
std::optional<ObstructionVerdict> check_degseq_4_2_even_order(const Graph& g);

// (5n^2 + 7n + 2 + 4a) / (2(n + 1)): the valence forced on a graph of even
// order n with degree sequence 4,2,...,2 whose degree-4 vertex carries
// label a. Throws std::invalid_argument outside n even >= 6, 1 <= a <= n.
Rational theorem_valence_gap(std::int64_t n, std::int64_t alpha);

// Fires when no vertex bijection gives an integral valence. Exact for graphs
// with at most two distinct degrees; otherwise only the empty-window test
// ceil(min S_G) > floor(max S_G) is applied. Throws std::invalid_argument
// for edgeless graphs.
std::optional<ObstructionVerdict> check_valence_integrality(const Graph& g);

// Runs the checks in the order above and returns the first verdict.
std::optional<ObstructionVerdict> find_obstruction(const Graph& g);

}  // namespace semlab

#endif  // SEMLAB_OBSTRUCTION_H_
