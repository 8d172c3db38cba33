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

#ifndef SEMLAB_LABELING_H_
#define SEMLAB_LABELING_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "semlab/graph.h"

namespace semlab {

// Exact rational arithmetic for valences. Labels stay far below 2^31, so
// numerators of the form sum(deg * label) fit comfortably in 64 bits.
using Rational = boost::rational<std::int64_t>;

std::int64_t Floor(const Rational& r);
std::int64_t Ceil(const Rational& r);
inline bool IsInteger(const Rational& r) { return r.denominator() == 1; }

// True iff `labels` is a permutation of 1..labels.size().
bool IsBijection(std::span<const int> labels);

// A bijection from vertices 0..p-1 onto labels 1..p.
class VertexLabeling {
 public:
  // Throws std::invalid_argument unless `labels` is a permutation of 1..p.
  explicit VertexLabeling(std::vector<int> labels);

  static VertexLabeling Identity(int order);

  int order() const { return static_cast<int>(labels_.size()); }
  int operator[](int v) const { return labels_[v]; }
  std::span<const int> labels() const { return labels_; }

  // v -> p + 1 - f(v). Preserves extendability; maps valence k to
  // 4p + q + 3 - k.
  VertexLabeling Complement() const;

  friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

 private:
  std::vector<int> labels_;
};

// The multiset {f(u) + f(v) : uv in E}, one entry per edge in edge order.
struct EdgeSumSet {
  std::vector<int> sums;
  int min = 0;  // meaningless when sums is empty
  int max = 0;
};

EdgeSumSet edge_sums(const Graph& g, const VertexLabeling& f);

// True iff the sums are pairwise distinct and consecutive. Vacuously true
// when there are no edges.
bool is_extendable(const EdgeSumSet& s);

struct EdgeLabel {
  int u = 0;
  int v = 0;
  int label = 0;
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

// A labeling of V and E, as read from or written to a certificate. Nothing
// here is trusted until verify_sem() accepts it against a graph.
struct SemLabeling {
  std::vector<int> vertex_labels;
  std::vector<EdgeLabel> edge_labels;
  std::int64_t valence = 0;
  friend bool operator==(const SemLabeling&, const SemLabeling&) = default;
};

// Completes an extendable vertex labeling: k = p + q + min(S) and each edge
// receives k - f(u) - f(v). Throws std::invalid_argument when f is not
// extendable or the graph has no edges.
SemLabeling extend_to_sem(const Graph& g, const VertexLabeling& f);

enum class VerifyFailure {
  kNone,
  kVertexCount,
  kEdgeCount,
  kUnknownEdge,
  kDuplicateEdge,
  kVertexRange,
  kEdgeRange,
  kNonConstantValence,
  kValenceMismatch,
};

std::string_view to_string(VerifyFailure failure);

struct VerifyResult {
  VerifyFailure failure = VerifyFailure::kNone;
  std::string detail;

  bool ok() const { return failure == VerifyFailure::kNone; }
  explicit operator bool() const { return ok(); }
};

// Checks every super edge-magic condition and reports the first one broken.
VerifyResult verify_sem(const Graph& g, const SemLabeling& labeling);

// (sum_v deg(v) f(v) + sum_{i=p+1}^{p+q} i) / q. For extendable f this is
// the integer valence of the extension. Throws std::invalid_argument if the
// graph has no edges.
Rational valence_of(const Graph& g, const VertexLabeling& f);

// sum_{i=p+1}^{p+q} i, the edge-label contribution to every valence.
std::int64_t edge_label_total(int order, int size);

}  // namespace semlab

#endif  // SEMLAB_LABELING_H_
