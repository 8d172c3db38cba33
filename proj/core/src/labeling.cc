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

#include "semlab/labeling.h"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace semlab {

std::int64_t Floor(const Rational& r) {
  const std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();  // always positive
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

std::int64_t Ceil(const Rational& r) { return -Floor(-r); }

bool IsBijection(std::span<const int> labels) {
  const int p = static_cast<int>(labels.size());
  std::vector<bool> seen(p + 1, false);
  for (int label : labels) {
    if (label < 1 || label > p || seen[label]) return false;
    seen[label] = true;
  }
  return true;
}

VertexLabeling::VertexLabeling(std::vector<int> labels)
    : labels_(std::move(labels)) {
  if (!IsBijection(labels_)) {
    throw std::invalid_argument("vertex labels must be a permutation of 1..p");
  }
}

VertexLabeling VertexLabeling::Identity(int order) {
  std::vector<int> labels(order);
  std::iota(labels.begin(), labels.end(), 1);
  return VertexLabeling(std::move(labels));
}

VertexLabeling VertexLabeling::Complement() const {
  std::vector<int> labels(labels_.size());
  const int p = order();
  std::transform(labels_.begin(), labels_.end(), labels.begin(),
                 [p](int label) { return p + 1 - label; });
  return VertexLabeling(std::move(labels));
}

EdgeSumSet edge_sums(const Graph& g, const VertexLabeling& f) {
  if (f.order() != g.order()) {
    throw std::invalid_argument("labeling order does not match graph order");
  }
  EdgeSumSet s;
  s.sums.reserve(g.size());
  for (const Edge& e : g.edges()) s.sums.push_back(f[e.u] + f[e.v]);
  if (!s.sums.empty()) {
    auto [lo, hi] = std::minmax_element(s.sums.begin(), s.sums.end());
    s.min = *lo;
    s.max = *hi;
  }
  return s;
}

bool is_extendable(const EdgeSumSet& s) {
  if (s.sums.empty()) return true;
  const int q = static_cast<int>(s.sums.size());
  if (s.max - s.min != q - 1) return false;
  std::vector<bool> seen(q, false);
  for (int sum : s.sums) {
    int slot = sum - s.min;
    if (slot < 0 || slot >= q || seen[slot]) return false;
    seen[slot] = true;
  }
  return true;
}

std::int64_t edge_label_total(int order, int size) {
  const std::int64_t p = order;
  const std::int64_t q = size;
  return q * p + q * (q + 1) / 2;
}

Rational valence_of(const Graph& g, const VertexLabeling& f) {
  if (g.size() == 0) {
    throw std::invalid_argument("valence is undefined for an edgeless graph");
  }
  if (f.order() != g.order()) {
    throw std::invalid_argument("labeling order does not match graph order");
  }
  std::int64_t weighted = 0;
  for (int v = 0; v < g.order(); ++v) {
    weighted += static_cast<std::int64_t>(g.degree(v)) * f[v];
  }
  return Rational(weighted + edge_label_total(g.order(), g.size()), g.size());
}

SemLabeling extend_to_sem(const Graph& g, const VertexLabeling& f) {
  if (g.size() == 0) {
    throw std::invalid_argument("valence is undefined for an edgeless graph");
  }
  const EdgeSumSet s = edge_sums(g, f);
  if (!is_extendable(s)) {
    throw std::invalid_argument("edge sums are not distinct and consecutive");
  }
  const int p = g.order();
  const int q = g.size();

  SemLabeling out;
  out.vertex_labels.assign(f.labels().begin(), f.labels().end());
  out.valence = static_cast<std::int64_t>(p) + q + s.min;
  out.edge_labels.reserve(q);
  for (std::size_t i = 0; i < s.sums.size(); ++i) {
    const Edge& e = g.edges()[i];
    const std::int64_t label = out.valence - s.sums[i];
    if (label < p + 1 || label > p + q) {
      throw std::logic_error("extension produced edge label " +
                             std::to_string(label) + " outside p+1..p+q");
    }
    out.edge_labels.push_back({e.u, e.v, static_cast<int>(label)});
  }
  assert(valence_of(g, f) == Rational(out.valence));
  return out;
}

std::string_view to_string(VerifyFailure failure) {
  switch (failure) {
    case VerifyFailure::kNone:
      return "ok";
    case VerifyFailure::kVertexCount:
      return "vertex label count mismatch";
    case VerifyFailure::kEdgeCount:
      return "edge label count mismatch";
    case VerifyFailure::kUnknownEdge:
      return "labeled edge not in graph";
    case VerifyFailure::kDuplicateEdge:
      return "edge labeled twice";
    case VerifyFailure::kVertexRange:
      return "vertex labels not a bijection onto 1..p";
    case VerifyFailure::kEdgeRange:
      return "edge labels not a bijection onto p+1..p+q";
    case VerifyFailure::kNonConstantValence:
      return "non-constant valence";
    case VerifyFailure::kValenceMismatch:
      return "declared valence mismatch";
  }
  return "unknown";
}

VerifyResult verify_sem(const Graph& g, const SemLabeling& labeling) {
  const int p = g.order();
  const int q = g.size();
  auto fail = [](VerifyFailure f, std::string detail) {
    return VerifyResult{f, std::move(detail)};
  };

  if (static_cast<int>(labeling.vertex_labels.size()) != p) {
    return fail(VerifyFailure::kVertexCount,
                "expected " + std::to_string(p) + " vertex labels, got " +
                    std::to_string(labeling.vertex_labels.size()));
  }
  if (static_cast<int>(labeling.edge_labels.size()) != q) {
    return fail(VerifyFailure::kEdgeCount,
                "expected " + std::to_string(q) + " edge labels, got " +
                    std::to_string(labeling.edge_labels.size()));
  }
  std::vector<bool> edge_seen(q, false);
  for (const EdgeLabel& el : labeling.edge_labels) {
    auto index = (el.u >= 0 && el.u < p && el.v >= 0 && el.v < p)
                     ? g.FindEdge(el.u, el.v)
                     : std::nullopt;
    if (!index) {
      return fail(VerifyFailure::kUnknownEdge, std::to_string(el.u) + " " +
                                                   std::to_string(el.v));
    }
    if (edge_seen[*index]) {
      return fail(VerifyFailure::kDuplicateEdge, std::to_string(el.u) + " " +
                                                     std::to_string(el.v));
    }
    edge_seen[*index] = true;
  }
  if (!IsBijection(labeling.vertex_labels)) {
    return fail(VerifyFailure::kVertexRange, "");
  }
  std::vector<bool> label_seen(q, false);
  for (const EdgeLabel& el : labeling.edge_labels) {
    const int slot = el.label - p - 1;
    if (slot < 0 || slot >= q || label_seen[slot]) {
      return fail(VerifyFailure::kEdgeRange,
                  "edge " + std::to_string(el.u) + " " + std::to_string(el.v) +
                      " has label " + std::to_string(el.label));
    }
    label_seen[slot] = true;
  }
  if (q == 0) return {};

  const auto& f = labeling.vertex_labels;
  auto total = [&](const EdgeLabel& el) {
    return static_cast<std::int64_t>(f[el.u]) + f[el.v] + el.label;
  };
  const std::int64_t k = total(labeling.edge_labels.front());
  for (const EdgeLabel& el : labeling.edge_labels) {
    if (total(el) != k) {
      return fail(VerifyFailure::kNonConstantValence,
                  "edge " + std::to_string(el.u) + " " + std::to_string(el.v) +
                      " sums to " + std::to_string(total(el)) + ", expected " +
                      std::to_string(k));
    }
  }
  if (k != labeling.valence) {
    return fail(VerifyFailure::kValenceMismatch,
                "edges sum to " + std::to_string(k) + ", certificate says " +
                    std::to_string(labeling.valence));
  }
  return {};
}

}  // namespace semlab
