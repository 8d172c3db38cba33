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

#include "semlab/solver.h"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "semlab/search_state.h"

namespace semlab {

std::vector<std::int64_t> ValenceInterval::values() const {
  std::vector<std::int64_t> out;
  for (std::int64_t k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

std::pair<std::int64_t, std::int64_t> rearrangement_extremes(
    const DegreeSequence& degrees) {
  DegreeSequence sorted = degrees;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::int64_t p = static_cast<std::int64_t>(sorted.size());
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (std::int64_t i = 0; i < p; ++i) {
    lo += sorted[i] * (i + 1);
    hi += sorted[i] * (p - i);
  }
  return {lo, hi};
}

ValenceInterval sem_interval(const Graph& g) {
  if (g.size() == 0) {
    throw std::invalid_argument("valence is undefined for an edgeless graph");
  }
  const auto [lo, hi] = rearrangement_extremes(degree_sequence(g));
  const std::int64_t constant = edge_label_total(g.order(), g.size());
  ValenceInterval interval;
  interval.min_value = Rational(lo + constant, g.size());
  interval.max_value = Rational(hi + constant, g.size());
  interval.lo = Ceil(interval.min_value);
  interval.hi = Floor(interval.max_value);
  return interval;
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kSem:
      return "SEM";
    case SearchStatus::kNotSemExhausted:
      return "NOT_SEM_EXHAUSTED";
    case SearchStatus::kNotSemObstruction:
      return "NOT_SEM_OBSTRUCTION";
    case SearchStatus::kUnknownBudgetExceeded:
      return "UNKNOWN_BUDGET_EXCEEDED";
    case SearchStatus::kTrivialEdgeless:
      return "TRIVIAL_EDGELESS";
  }
  return "UNKNOWN";
}

std::string_view to_string(Perfection perfection) {
  switch (perfection) {
    case Perfection::kPerfect:
      return "perfect";
    case Perfection::kNotPerfect:
      return "not-perfect";
    case Perfection::kVacuousNotSem:
      return "vacuous-not-sem";
    case Perfection::kUnknown:
      return "unknown";
  }
  return "unknown";
}

bool SearchStats::full_coverage(int order) const {
  if (static_cast<int>(covered_anchor_labels.size()) != order) return false;
  for (int i = 0; i < order; ++i) {
    if (covered_anchor_labels[i] != i + 1) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

enum class Mode { kFirstWitness, kAllValences };

constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();
constexpr int kPrefixDepth = 2;
constexpr std::uint64_t kFlushEvery = 1024;

struct TaskResult {
  std::uint64_t nodes = 0;
  std::uint64_t labelings = 0;
  std::optional<std::vector<int>> witness;
  std::set<std::int64_t> valences;
};

struct EngineResult {
  std::optional<std::vector<int>> witness;
  std::vector<std::int64_t> valences;
  bool budget_exceeded = false;
  SearchStats stats;
};

SearchConfig Normalize(const Graph& g, SearchConfig config) {
  if (config.threads <= 0) {
    config.threads =
        static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  if (config.anchor_label) {
    if (*config.anchor_label < 1 || *config.anchor_label > g.order()) {
      throw std::invalid_argument("anchor label outside 1..p");
    }
    config.symmetry_reduction = false;
  }
  return config;
}

// Backtracking over vertex labelings. The first kPrefixDepth assignments
// are expanded up front into an ordered task list that a pool of workers
// drains; merging by task index keeps every result independent of
// scheduling.
class Engine {
 public:
  Engine(const Graph& g, const SearchConfig& config, Mode mode)
      : g_(g), config_(config), mode_(mode), order_(search_order(g)) {}

  EngineResult Run() {
    const int p = g_.order();
    EngineResult result;
    result.stats.threads = config_.threads;
    if (p == 0) return result;

    std::vector<int> anchor_labels;
    if (config_.anchor_label) {
      anchor_labels.push_back(*config_.anchor_label);
    } else {
      const int last = config_.symmetry_reduction ? (p + 1) / 2 : p;
      for (int label = 1; label <= last; ++label) anchor_labels.push_back(label);
    }
    result.stats.anchor_vertex = order_[0];
    result.stats.anchor_labels = anchor_labels;
    std::set<int> covered(anchor_labels.begin(), anchor_labels.end());
    if (config_.symmetry_reduction) {
      for (int label : anchor_labels) covered.insert(p + 1 - label);
    }
    result.stats.covered_anchor_labels.assign(covered.begin(), covered.end());

    PartialLabeling root(g_, order_);
    std::uint64_t prefix_nodes = 0;
    if (root.WindowFeasible()) {
      std::vector<int> prefix;
      Expand(root, anchor_labels, prefix, prefix_nodes);
    }
    result.stats.tasks = static_cast<int>(tasks_.size());

    results_.assign(tasks_.size(), {});
    used_budget_ = prefix_nodes;
    const int workers = std::max(
        1, std::min<int>(config_.threads, static_cast<int>(tasks_.size())));
    {
      std::vector<std::jthread> pool;
      for (int i = 0; i < workers; ++i) pool.emplace_back([this] { Work(); });
    }

    result.budget_exceeded = budget_exceeded_.load();
    result.stats.nodes = prefix_nodes;
    const std::size_t best = best_task_.load();
    const std::size_t counted =
        best == kNoTask ? tasks_.size() : best + 1;
    for (std::size_t i = 0; i < counted; ++i) {
      result.stats.nodes += results_[i].nodes;
      result.stats.labelings += results_[i].labelings;
    }
    if (best != kNoTask) result.witness = results_[best].witness;
    std::set<std::int64_t> all;
    for (const auto& r : results_) all.insert(r.valences.begin(), r.valences.end());
    result.valences.assign(all.begin(), all.end());
    return result;
  }

 private:
  void Expand(PartialLabeling& state, const std::vector<int>& first_labels,
              std::vector<int>& prefix, std::uint64_t& nodes) {
    if (state.depth() == kPrefixDepth || state.complete()) {
      tasks_.push_back(prefix);
      return;
    }
    std::vector<int> candidates;
    if (state.depth() == 0) {
      candidates = first_labels;
    } else {
      for (int label = 1; label <= g_.order(); ++label) {
        if (!state.label_used(label)) candidates.push_back(label);
      }
    }
    for (int label : candidates) {
      ++nodes;
      if (state.Push(label)) {
        prefix.push_back(label);
        Expand(state, first_labels, prefix, nodes);
        prefix.pop_back();
      }
      state.Pop();
    }
  }

  void Work() {
    PartialLabeling state(g_, order_);
    while (true) {
      const std::size_t index = next_task_.fetch_add(1);
      if (index >= tasks_.size()) return;
      if (Superseded(index) || budget_exceeded_.load()) continue;
      for (int label : tasks_[index]) state.Push(label);
      TaskContext ctx{index, &results_[index]};
      Explore(state, ctx);
      used_budget_ += ctx.pending;
      while (state.depth() > 0) state.Pop();
    }
  }

  struct TaskContext {
    std::size_t index;
    TaskResult* result;
    std::uint64_t pending = 0;
    bool stop = false;
  };

  bool Superseded(std::size_t index) const {
    return mode_ == Mode::kFirstWitness && best_task_.load() < index;
  }

  // Returns false once the task must stop.
  bool CountNode(TaskContext& ctx) {
    ++ctx.result->nodes;
    ++ctx.pending;
    if (used_budget_.load(std::memory_order_relaxed) + ctx.pending >
        config_.budget) {
      budget_exceeded_ = true;
    }
    if (ctx.pending >= kFlushEvery) {
      used_budget_ += ctx.pending;
      ctx.pending = 0;
    }
    if (budget_exceeded_.load(std::memory_order_relaxed) ||
        Superseded(ctx.index)) {
      ctx.stop = true;
    }
    return !ctx.stop;
  }

  void Explore(PartialLabeling& state, TaskContext& ctx) {
    if (state.complete()) {
      OnLeaf(state, ctx);
      return;
    }
    const int p = g_.order();
    for (int label = 1; label <= p && !ctx.stop; ++label) {
      if (state.label_used(label)) continue;
      if (!CountNode(ctx)) return;
      if (state.Push(label)) Explore(state, ctx);
      state.Pop();
    }
  }

  void OnLeaf(const PartialLabeling& state, TaskContext& ctx) {
    ++ctx.result->labelings;
    const std::int64_t p = g_.order();
    const std::int64_t q = g_.size();
    if (mode_ == Mode::kAllValences) {
      const std::int64_t k = p + q + state.min_sum();
      ctx.result->valences.insert(k);
      if (config_.symmetry_reduction) ctx.result->valences.insert(4 * p + q + 3 - k);
      return;
    }
    ctx.result->witness.emplace(state.labels().begin(), state.labels().end());
    ctx.stop = true;
    std::size_t current = best_task_.load();
    while (ctx.index < current &&
           !best_task_.compare_exchange_weak(current, ctx.index)) {
    }
  }

  const Graph& g_;
  const SearchConfig& config_;
  const Mode mode_;
  const std::vector<int> order_;

  std::vector<std::vector<int>> tasks_;
  std::vector<TaskResult> results_;
  std::atomic<std::size_t> next_task_{0};
  std::atomic<std::size_t> best_task_{kNoTask};
  std::atomic<std::uint64_t> used_budget_{0};
  std::atomic<bool> budget_exceeded_{false};
};

}  // namespace

SearchOutcome search_sem(const Graph& g, const SearchConfig& config) {
  const auto start = Clock::now();
  SearchOutcome outcome;
  outcome.config = Normalize(g, config);
  if (g.size() == 0) {
    outcome.status = SearchStatus::kTrivialEdgeless;
    return outcome;
  }
  if (outcome.config.use_obstructions) {
    if (auto verdict = find_obstruction(g)) {
      outcome.status = SearchStatus::kNotSemObstruction;
      outcome.obstruction = std::move(verdict);
      outcome.stats.millis = MillisSince(start);
      return outcome;
    }
  }

  Engine engine(g, outcome.config, Mode::kFirstWitness);
  EngineResult result = engine.Run();
  outcome.stats = std::move(result.stats);
  if (result.witness) {
    outcome.status = SearchStatus::kSem;
    outcome.witness = extend_to_sem(g, VertexLabeling(*result.witness));
    if (!verify_sem(g, *outcome.witness)) {
      throw std::logic_error("search produced a witness that fails verification");
    }
  } else if (result.budget_exceeded) {
    outcome.status = SearchStatus::kUnknownBudgetExceeded;
  } else {
    outcome.status = SearchStatus::kNotSemExhausted;
  }
  outcome.stats.millis = MillisSince(start);
  return outcome;
}

ValenceSet sem_set(const Graph& g, const SearchConfig& config) {
  if (g.size() == 0) {
    throw std::invalid_argument("valence is undefined for an edgeless graph");
  }
  const auto start = Clock::now();
  const SearchConfig normalized = Normalize(g, config);
  const ValenceInterval interval = sem_interval(g);
  ValenceSet out;
  if (interval.empty()) {
    out.stats.threads = normalized.threads;
    return out;
  }
  Engine engine(g, normalized, Mode::kAllValences);
  EngineResult result = engine.Run();
  out.valences = std::move(result.valences);
  out.partial = result.budget_exceeded;
  out.stats = std::move(result.stats);
  out.stats.millis = MillisSince(start);
  for (std::int64_t k : out.valences) {
    if (!interval.contains(k)) {
      throw std::logic_error("valence " + std::to_string(k) +
                             " lies outside the valence interval");
    }
  }
  return out;
}

PerfectionReport is_perfect_sem(const Graph& g, const SearchConfig& config) {
  PerfectionReport report;
  report.interval = sem_interval(g);
  report.valences = sem_set(g, config);
  if (report.valences.partial) {
    report.verdict = Perfection::kUnknown;
  } else if (report.interval.empty()) {
    report.verdict = Perfection::kVacuousNotSem;
  } else {
    report.verdict = report.valences.valences == report.interval.values()
                         ? Perfection::kPerfect
                         : Perfection::kNotPerfect;
  }
  return report;
}

namespace {

// Calls visit(labels) for every bijection, with `pin` held fixed, until
// visit returns false. Returns the number of bijections visited.
std::uint64_t EnumerateBijections(
    const Graph& g, std::optional<OraclePin> pin,
    const std::function<bool(const std::vector<int>&)>& visit) {
  const int p = g.order();
  if (pin && (pin->vertex < 0 || pin->vertex >= p || pin->label < 1 ||
              pin->label > p)) {
    throw std::invalid_argument("oracle pin outside the graph");
  }
  const int free_count = p - (pin ? 1 : 0);
  if (free_count > kOracleMaxFreeVertices) {
    throw std::invalid_argument("oracle enumeration limited to " +
                                std::to_string(kOracleMaxFreeVertices) +
                                " free vertices");
  }
  std::vector<int> free_vertices;
  std::vector<int> pool;
  for (int v = 0; v < p; ++v) {
    if (!pin || v != pin->vertex) free_vertices.push_back(v);
  }
  for (int label = 1; label <= p; ++label) {
    if (!pin || label != pin->label) pool.push_back(label);
  }
  std::vector<int> labels(p, 0);
  if (pin) labels[pin->vertex] = pin->label;
  std::uint64_t visited = 0;
  do {
    for (std::size_t i = 0; i < free_vertices.size(); ++i) {
      labels[free_vertices[i]] = pool[i];
    }
    ++visited;
    if (!visit(labels)) break;
  } while (std::next_permutation(pool.begin(), pool.end()));
  return visited;
}

}  // namespace

SearchOutcome oracle_search(const Graph& g, std::optional<OraclePin> pin) {
  const auto start = Clock::now();
  SearchOutcome outcome;
  outcome.config.use_obstructions = false;
  outcome.config.symmetry_reduction = false;
  outcome.config.threads = 1;
  if (pin) outcome.config.anchor_label = pin->label;
  if (g.size() == 0) {
    outcome.status = SearchStatus::kTrivialEdgeless;
    return outcome;
  }
  std::optional<VertexLabeling> found;
  const std::uint64_t visited =
      EnumerateBijections(g, pin, [&](const std::vector<int>& labels) {
        VertexLabeling f(labels);
        if (!is_extendable(edge_sums(g, f))) return true;
        found = std::move(f);
        return false;
      });
  outcome.stats.nodes = visited;
  outcome.stats.labelings = visited;
  if (found) {
    outcome.status = SearchStatus::kSem;
    outcome.witness = extend_to_sem(g, *found);
  } else {
    outcome.status = SearchStatus::kNotSemExhausted;
  }
  outcome.stats.millis = MillisSince(start);
  return outcome;
}

std::vector<std::int64_t> oracle_sem_set(const Graph& g,
                                         std::optional<OraclePin> pin) {
  if (g.size() == 0) {
    throw std::invalid_argument("valence is undefined for an edgeless graph");
  }
  std::set<std::int64_t> valences;
  const std::int64_t p = g.order();
  const std::int64_t q = g.size();
  EnumerateBijections(g, pin, [&](const std::vector<int>& labels) {
    const EdgeSumSet s = edge_sums(g, VertexLabeling(labels));
    if (is_extendable(s)) valences.insert(p + q + s.min);
    return true;
  });
  return {valences.begin(), valences.end()};
}

}  // namespace semlab
