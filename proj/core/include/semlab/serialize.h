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

// JSON forms of certificates and search reports.
//
// Certificate:
//   {"vertex_labels":[...], "edge_labels":[[u,v,label],...], "valence":k}
// Search report:
//   {"graph":{...}, "status":"...", "witness":{...}|null,
//    "obstruction":{...}|null, "interval":[lo,hi]|null,
//    "valence_set":[...]|null, "stats":{...}, "config":{...}}

#ifndef SEMLAB_SERIALIZE_H_
#define SEMLAB_SERIALIZE_H_

#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "semlab/graph.h"
#include "semlab/labeling.h"
#include "semlab/obstruction.h"
#include "semlab/solver.h"

namespace semlab {

using Json = nlohmann::ordered_json;

Json to_json(const Graph& g);
Json to_json(const SemLabeling& labeling);
Json to_json(const ObstructionVerdict& verdict);
Json to_json(const SearchConfig& config);
Json to_json(const SearchStats& stats);
// [lo, hi], or null when the interval is empty.
Json interval_json(const ValenceInterval& interval);

Json outcome_json(const Graph& g, const SearchOutcome& outcome,
                  const std::optional<ValenceInterval>& interval = std::nullopt,
                  const std::optional<ValenceSet>& valences = std::nullopt);

// Throws ParseError on malformed JSON or missing/mistyped fields. Label
// values are not checked; that is verify_sem's job.
SemLabeling sem_labeling_from_json(std::string_view text);

}  // namespace semlab

#endif  // SEMLAB_SERIALIZE_H_
