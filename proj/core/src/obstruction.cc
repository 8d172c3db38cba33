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

#include "semlab/obstruction.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "semlab/solver.h"

namespace semlab {

std::string_view to_string(ObstructionRule rule) {
  switch (rule) {
    case ObstructionRule::kEvenDegreeSizeMod4:
      return "EVEN_DEG_Q_MOD4";
    case ObstructionRule::kDegseq42EvenOrder:
      return "DEGSEQ_4_2_EVEN_ORDER";
    case ObstructionRule::kValenceIntegrality:
      return "VALENCE_INTEGRALITY";
  }
  return "UNKNOWN";
}

std::optional<ObstructionVerdict> check_even_degree_parity(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) return std::nullopt;
  }
  if (g.size() % 4 != 2) return std::nullopt;
  return ObstructionVerdict{
      ObstructionRule::kEvenDegreeSizeMod4,
      "every vertex has even degree and the size is 2 mod 4",
      {{"q", g.size()}, {"q_mod_4", g.size() % 4}}};
}

std::optional<ObstructionVerdict> check_degseq_4_2_even_order(const Graph& g) {
  const int p = g.order();
  if (p < 6 || p % 2 != 0) return std::nullopt;
  const DegreeSequence degrees = degree_sequence(g);
  if (degrees.front() != 4) return std::nullopt;
  if (!std::all_of(degrees.begin() + 1, degrees.end(),
                   [](int d) { return d == 2; })) {
    return std::nullopt;
  }
  return ObstructionVerdict{
      ObstructionRule::kDegseq42EvenOrder,
      "even order >= 6 with degree sequence 4,2,...,2 forces q = p + 1 and a "
      "valence of (5p/2 + 1) + 2a/(p + 1), never an integer; applies to "
      "disconnected realizations too",
      {{"p", p}, {"p_mod_2", p % 2}, {"q", g.size()}}};
}

Rational theorem_valence_gap(std::int64_t n, std::int64_t alpha) {
  if (n < 6 || n % 2 != 0) {
    throw std::invalid_argument("order must be even and at least 6");
  }
  if (alpha < 1 || alpha > n) {
    throw std::invalid_argument("degree-4 label must lie in 1..n");
  }
  return Rational(5 * n * n + 7 * n + 2 + 4 * alpha, 2 * (n + 1));
}

std::optional<ObstructionVerdict> check_valence_integrality(const Graph& g) {
  const std::int64_t p = g.order();
  const std::int64_t q = g.size();
  if (q == 0) {
    throw std::invalid_argument("valence is undefined for an edgeless graph");
  }
  const std::int64_t constant = edge_label_total(g.order(), g.size());
  const DegreeSequence degrees = degree_sequence(g);
  const std::int64_t high = degrees.front();
  const std::int64_t low = degrees.back();
  const bool two_degrees_at_most =
      std::all_of(degrees.begin(), degrees.end(),
                  [&](int d) { return d == high || d == low; });

  if (two_degrees_at_most) {
    // Numerator = low * (1 + ... + p) + (high - low) * (labels on the
    // high-degree vertices) + constant. The h high-degree labels can sum to
    // every integer between the h smallest and the h largest labels.
    const std::int64_t h =
        high == low ? 0 : std::count(degrees.begin(), degrees.end(), high);
    const std::int64_t base = low * p * (p + 1) / 2 + constant;
    const std::int64_t min_sum = h * (h + 1) / 2;
    const std::int64_t max_sum = h * (2 * p - h + 1) / 2;
    for (std::int64_t sum = min_sum; sum <= max_sum; ++sum) {
      if ((base + (high - low) * sum) % q == 0) return std::nullopt;
    }
    return ObstructionVerdict{
        ObstructionRule::kValenceIntegrality,
        "no placement of labels on the high-degree vertices makes "
        "(sum deg*label + sum of edge labels) divisible by q",
        {{"q", q},
         {"min_numerator", base + (high - low) * min_sum},
         {"max_numerator", base + (high - low) * max_sum}}};
  }

  const auto [min_weighted, max_weighted] = rearrangement_extremes(degrees);
  const Rational lo(min_weighted + constant, q);
  const Rational hi(max_weighted + constant, q);
  if (Ceil(lo) <= Floor(hi)) return std::nullopt;
  return ObstructionVerdict{
      ObstructionRule::kValenceIntegrality,
      "the valence window [min S_G, max S_G] contains no integer",
      {{"q", q},
       {"min_numerator", min_weighted + constant},
       {"max_numerator", max_weighted + constant}}};
}

std::optional<ObstructionVerdict> find_obstruction(const Graph& g) {
  if (auto v = check_even_degree_parity(g)) return v;
  if (auto v = check_degseq_4_2_even_order(g)) return v;
  if (g.size() > 0) return check_valence_integrality(g);
  return std::nullopt;
}

}  // namespace semlab
