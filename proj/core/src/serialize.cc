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

#include "semlab/serialize.h"

#include <string>

namespace semlab {

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"order", g.order()},
          {"size", g.size()},
          {"edges", std::move(edges)},
          {"graph6", to_graph6(g)}};
}

Json to_json(const SemLabeling& labeling) {
  Json edges = Json::array();
  for (const EdgeLabel& el : labeling.edge_labels) {
    edges.push_back({el.u, el.v, el.label});
  }
  return {{"vertex_labels", labeling.vertex_labels},
          {"edge_labels", std::move(edges)},
          {"valence", labeling.valence}};
}

Json to_json(const ObstructionVerdict& verdict) {
  Json params = Json::object();
  for (const auto& [name, value] : verdict.parameters) params[name] = value;
  return {{"rule", std::string(to_string(verdict.rule))},
          {"justification", verdict.justification},
          {"parameters", std::move(params)}};
}

Json to_json(const SearchConfig& config) {
  return {{"use_obstructions", config.use_obstructions},
          {"symmetry_reduction", config.symmetry_reduction},
          {"budget", config.budget},
          {"threads", config.threads},
          {"anchor_label", config.anchor_label ? Json(*config.anchor_label)
                                               : Json(nullptr)}};
}

Json to_json(const SearchStats& stats) {
  return {{"nodes", stats.nodes},
          {"labelings", stats.labelings},
          {"millis", stats.millis},
          {"tasks", stats.tasks},
          {"anchor_vertex", stats.anchor_vertex},
          {"anchor_labels", stats.anchor_labels},
          {"covered_anchor_labels", stats.covered_anchor_labels}};
}

Json interval_json(const ValenceInterval& interval) {
  if (interval.empty()) return nullptr;
  return Json::array({interval.lo, interval.hi});
}

Json outcome_json(const Graph& g, const SearchOutcome& outcome,
                  const std::optional<ValenceInterval>& interval,
                  const std::optional<ValenceSet>& valences) {
  Json out;
  out["graph"] = to_json(g);
  out["status"] = std::string(to_string(outcome.status));
  out["witness"] = outcome.witness ? to_json(*outcome.witness) : Json(nullptr);
  out["obstruction"] =
      outcome.obstruction ? to_json(*outcome.obstruction) : Json(nullptr);
  out["interval"] = interval ? interval_json(*interval) : Json(nullptr);
  out["valence_set"] = valences ? Json(valences->valences) : Json(nullptr);
  out["stats"] = to_json(outcome.stats);
  out["config"] = to_json(outcome.config);
  return out;
}

SemLabeling sem_labeling_from_json(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    SemLabeling labeling;
    labeling.vertex_labels = doc.at("vertex_labels").get<std::vector<int>>();
    for (const Json& entry : doc.at("edge_labels")) {
      if (!entry.is_array() || entry.size() != 3) {
        throw ParseError("edge_labels entries must be [u, v, label]");
      }
      labeling.edge_labels.push_back(
          {entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>()});
    }
    labeling.valence = doc.at("valence").get<std::int64_t>();
    return labeling;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

}  // namespace semlab
