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

#ifndef SEMLAB_TOOLS_CLI_H_
#define SEMLAB_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semlab/graph.h"
#include "semlab/solver.h"

namespace semlab::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotSem = 1;       // also: certificate rejected
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitInputError = 3;   // unreadable graph/certificate
inline constexpr int kExitUsage = 4;

int exit_code_for(SearchStatus status);

// Builds a graph from generator tokens such as
//   cycle 5 | two-cycle 3 5 | cactus 3,3,3 0:0 1:1
// with "+" between terms for a disjoint union. Throws ParseError.
Graph graph_from_generator(std::span<const std::string> tokens);

struct SweepRow {
  std::string family;
  std::string params;
  int order = 0;
  int size = 0;
  std::string obstruction;  // rule id, empty when none fired
  SearchStatus status = SearchStatus::kUnknownBudgetExceeded;
  std::optional<ValenceInterval> interval;
  std::optional<std::vector<std::int64_t>> valences;  // empty when unknown
  std::uint64_t nodes = 0;
  double millis = 0.0;
};

// Fixed column order:
//   family,params,order,size,obstruction,status,interval_lo,interval_hi,
//   valence_set,nodes[,millis]
std::string sweep_csv(std::span<const SweepRow> rows, bool with_timing);

SweepRow sweep_row(std::string family, std::string params, const Graph& g,
                   const SearchConfig& config);

// Entry point shared by the semlab binary and the tests. args excludes the
// program name.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace semlab::cli

#endif  // SEMLAB_TOOLS_CLI_H_
