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

#include "cli.h"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "semlab/graph.h"
#include "semlab/labeling.h"
#include "semlab/obstruction.h"
#include "semlab/serialize.h"
#include "semlab/solver.h"

namespace semlab::cli {

int exit_code_for(SearchStatus status) {
  switch (status) {
    case SearchStatus::kSem:
    case SearchStatus::kTrivialEdgeless:
      return kExitOk;
    case SearchStatus::kNotSemExhausted:
    case SearchStatus::kNotSemObstruction:
      return kExitNotSem;
    case SearchStatus::kUnknownBudgetExceeded:
      return kExitUnknown;
  }
  return kExitUnknown;
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ToInt(const std::string& token) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected integer, got '" + token + "'");
  }
  return value;
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

Graph GeneratorTerm(std::span<const std::string> tokens) {
  if (tokens.empty()) throw ParseError("empty generator term");
  const std::string& family = tokens[0];
  auto arity = [&](std::size_t n) {
    if (tokens.size() != n + 1) {
      throw ParseError("generator '" + family + "' takes " +
                       std::to_string(n) + " argument(s)");
    }
  };
  try {
    if (family == "cycle") {
      arity(1);
      return make_cycle(ToInt(tokens[1]));
    }
    if (family == "two-cycle") {
      arity(2);
      return make_two_cycle(ToInt(tokens[1]), ToInt(tokens[2]));
    }
    if (family == "cactus") {
      if (tokens.size() < 2) throw ParseError("cactus needs cycle lengths");
      CactusSpec spec;
      for (const auto& len : Split(tokens[1], ',')) {
        spec.cycle_lengths.push_back(ToInt(len));
      }
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        auto parts = Split(tokens[i], ':');
        if (parts.size() != 2) {
          throw ParseError("cactus attachment must be parent:position");
        }
        spec.attachments.push_back({ToInt(parts[0]), ToInt(parts[1])});
      }
      return make_cactus(spec);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(family + ": " + e.what());
  }
  throw ParseError("unknown generator '" + family + "'");
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GraphInput {
  std::vector<std::string> gen;
  std::string g6;
  std::string path;
  std::string format = "auto";

  void Register(CLI::App* app) {
    app->add_option("--gen", gen,
                    "generator, e.g. 'cycle 5', 'two-cycle 3 5', "
                    "'cactus 3,3,3 0:0 1:1'; join terms with '+'")
        ->expected(1, -1);
    app->add_option("--g6", g6, "graph6 string");
    app->add_option("graph", path, "edge-list or graph6 file");
    app->add_option("--format", format, "file format")
        ->check(CLI::IsMember({"auto", "edge-list", "graph6"}));
  }

  Graph Load() const {
    if (!gen.empty()) return graph_from_generator(gen);
    if (!g6.empty()) return parse_graph(g6, GraphFormat::kGraph6);
    if (!path.empty()) {
      const std::string text = ReadFile(path);
      if (format == "edge-list") return parse_graph(text, GraphFormat::kEdgeList);
      if (format == "graph6") return parse_graph(text, GraphFormat::kGraph6);
      return parse_graph_auto(text);
    }
    throw UsageError("no graph given (use --gen, --g6 or a file path)");
  }
};

struct SolverFlags {
  bool no_obstructions = false;
  bool no_symmetry = false;
  std::uint64_t budget = 1'000'000'000;
  int threads = 0;
  int anchor_label = 0;

  void Register(CLI::App* app, bool with_obstructions) {
    if (with_obstructions) {
      app->add_flag("--no-obstructions", no_obstructions,
                    "skip analytic obstructions");
    }
    app->add_flag("--no-symmetry", no_symmetry,
                  "disable complement symmetry reduction");
    app->add_option("--budget", budget, "search node limit");
    app->add_option("--threads", threads,
                    "worker threads (0 = all cores; SEMLAB_THREADS overrides)");
    app->add_option("--anchor-label", anchor_label,
                    "search only labelings giving the first search vertex "
                    "this label");
  }

  SearchConfig Config() const {
    SearchConfig config;
    config.use_obstructions = !no_obstructions;
    config.symmetry_reduction = !no_symmetry;
    config.budget = budget;
    config.threads = threads;
    if (const char* env = std::getenv("SEMLAB_THREADS"); env && *env) {
      try {
        config.threads = ToInt(env);
      } catch (const ParseError&) {
        throw UsageError("SEMLAB_THREADS must be an integer");
      }
    }
    if (anchor_label != 0) config.anchor_label = anchor_label;
    return config;
  }
};

std::string FormatRational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string FormatSet(const std::vector<std::int64_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string FormatInterval(const ValenceInterval& interval) {
  if (interval.empty()) {
    return "empty (min S_G = " + FormatRational(interval.min_value) +
           ", max S_G = " + FormatRational(interval.max_value) + ")";
  }
  return "[" + std::to_string(interval.lo) + ", " + std::to_string(interval.hi) +
         "]";
}

void PrintLabeling(const SemLabeling& labeling, std::ostream& out) {
  out << "valence: " << labeling.valence << "\n";
  out << "vertex labels:";
  for (int label : labeling.vertex_labels) out << ' ' << label;
  out << "\nedge labels:";
  for (const EdgeLabel& el : labeling.edge_labels) {
    out << ' ' << el.u << '-' << el.v << ':' << el.label;
  }
  out << "\n";
}

constexpr char kEdgelessMessage[] =
    "trivially super edge-magic, valence undefined";

int RunCheck(const GraphInput& input, const std::string& cert_path,
             std::ostream& out, std::ostream& err) {
  Graph g;
  SemLabeling labeling;
  try {
    g = input.Load();
    labeling = sem_labeling_from_json(ReadFile(cert_path));
  } catch (const ParseError& e) {
    err << "parse: " << e.what() << "\n";
    return kExitInputError;
  }
  const VerifyResult result = verify_sem(g, labeling);
  if (!result) {
    out << "invalid: " << to_string(result.failure);
    if (!result.detail.empty()) out << " (" << result.detail << ")";
    out << "\n";
    return kExitNotSem;
  }
  out << "valid super edge-magic labeling, valence " << labeling.valence
      << "\n";
  return kExitOk;
}

int RunSolve(const Graph& g, const SolverFlags& flags, bool json,
             const std::string& cert_out, std::ostream& out) {
  const SearchOutcome outcome = search_sem(g, flags.Config());
  std::optional<ValenceInterval> interval;
  if (g.size() > 0) interval = sem_interval(g);
  if (!cert_out.empty() && outcome.witness) {
    std::ofstream file(cert_out);
    if (!file) throw ParseError("cannot write " + cert_out);
    file << to_json(*outcome.witness).dump(2) << "\n";
  }
  if (json) {
    out << outcome_json(g, outcome, interval).dump(2) << "\n";
    return exit_code_for(outcome.status);
  }
  out << "graph: order " << g.order() << ", size " << g.size() << ", graph6 "
      << to_graph6(g) << "\n";
  out << "status: " << to_string(outcome.status) << "\n";
  if (outcome.status == SearchStatus::kTrivialEdgeless) {
    out << kEdgelessMessage << "\n";
  }
  if (outcome.obstruction) {
    out << "obstruction: " << to_string(outcome.obstruction->rule) << " ("
        << outcome.obstruction->justification << ")\n";
  }
  if (interval) out << "interval: " << FormatInterval(*interval) << "\n";
  if (outcome.witness) PrintLabeling(*outcome.witness, out);
  out << "nodes: " << outcome.stats.nodes
      << "  labelings: " << outcome.stats.labelings << "  millis: "
      << std::fixed << std::setprecision(2) << outcome.stats.millis << "\n";
  return exit_code_for(outcome.status);
}

enum class Report { kInterval, kValences, kPerfect };

int RunReport(Report report, const Graph& g, const SolverFlags& flags,
              bool json, std::ostream& out) {
  if (g.size() == 0) {
    if (json) {
      out << Json{{"graph", to_json(g)}, {"message", kEdgelessMessage}}.dump(2)
          << "\n";
    } else {
      out << kEdgelessMessage << "\n";
    }
    return kExitOk;
  }
  Json doc;
  doc["graph"] = to_json(g);
  switch (report) {
    case Report::kInterval: {
      const ValenceInterval interval = sem_interval(g);
      doc["interval"] = interval_json(interval);
      doc["min_s"] = FormatRational(interval.min_value);
      doc["max_s"] = FormatRational(interval.max_value);
      if (!json) out << "interval: " << FormatInterval(interval) << "\n";
      break;
    }
    case Report::kValences: {
      const ValenceSet set = sem_set(g, flags.Config());
      doc["valence_set"] = set.valences;
      doc["partial"] = set.partial;
      doc["stats"] = to_json(set.stats);
      if (!json) {
        out << "valences: " << FormatSet(set.valences)
            << (set.partial ? " (partial: budget exceeded)" : "") << "\n";
      }
      if (set.partial) {
        if (json) out << doc.dump(2) << "\n";
        return kExitUnknown;
      }
      break;
    }
    case Report::kPerfect: {
      const PerfectionReport r = is_perfect_sem(g, flags.Config());
      doc["interval"] = interval_json(r.interval);
      doc["valence_set"] = r.valences.valences;
      doc["verdict"] = std::string(to_string(r.verdict));
      if (!json) {
        out << "interval: " << FormatInterval(r.interval) << "\n"
            << "valences: " << FormatSet(r.valences.valences) << "\n"
            << "verdict: " << to_string(r.verdict) << "\n";
      }
      if (r.verdict == Perfection::kUnknown) {
        if (json) out << doc.dump(2) << "\n";
        return kExitUnknown;
      }
      break;
    }
  }
  if (json) out << doc.dump(2) << "\n";
  return kExitOk;
}

std::string DotEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

int RunRender(const GraphInput& input, const std::string& cert_path,
              std::ostream& out, std::ostream& err) {
  Graph g;
  std::optional<SemLabeling> labeling;
  try {
    g = input.Load();
    if (!cert_path.empty()) {
      labeling = sem_labeling_from_json(ReadFile(cert_path));
    }
  } catch (const ParseError& e) {
    err << "parse: " << e.what() << "\n";
    return kExitInputError;
  }
  if (labeling) {
    const VerifyResult result = verify_sem(g, *labeling);
    if (!result) {
      err << "certificate does not match graph: " << to_string(result.failure)
          << "\n";
      return kExitNotSem;
    }
  }
  out << "graph G {\n";
  std::string title = "order " + std::to_string(g.order()) + ", size " +
                      std::to_string(g.size());
  if (labeling) title += ", valence " + std::to_string(labeling->valence);
  out << "  label=\"" << DotEscape(title) << "\";\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (labeling) out << ": " << labeling->vertex_labels[v];
    out << "\"];\n";
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    out << "  " << e.u << " -- " << e.v;
    if (labeling) {
      for (const EdgeLabel& el : labeling->edge_labels) {
        if (e.Joins(el.u, el.v)) out << " [label=\"" << el.label << "\"]";
      }
    }
    out << ";\n";
  }
  out << "}\n";
  return kExitOk;
}

std::pair<int, int> ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = ToInt(text);
      return {v, v};
    }
    return {ToInt(text.substr(0, dots)), ToInt(text.substr(dots + 2))};
  } catch (const ParseError&) {
    throw UsageError("bad range '" + text + "' (expected LO..HI)");
  }
}

struct SweepOptions {
  std::string family;
  std::string m = "3..7";
  std::string n = "3..7";
  std::string k = "2..3";
  std::string order = "5..8";
  std::string out_path;
  int max_order = 16;
  bool timing = false;
};

int RunSweep(const SweepOptions& opts, const SolverFlags& flags,
             std::ostream& out) {
  struct Instance {
    std::string params;
    Graph graph;
  };
  std::vector<Instance> instances;
  auto add = [&](std::string params, Graph g) {
    if (g.order() > opts.max_order) {
      throw UsageError(params + " has order " + std::to_string(g.order()) +
                       ", above --max-order " + std::to_string(opts.max_order));
    }
    instances.push_back({std::move(params), std::move(g)});
  };
  if (opts.family == "two-cycle-grid") {
    const auto [m_lo, m_hi] = ParseRange(opts.m);
    const auto [n_lo, n_hi] = ParseRange(opts.n);
    for (int m = m_lo; m <= m_hi; ++m) {
      for (int n = n_lo; n <= n_hi; ++n) {
        if (m < 3 || n < 3) throw UsageError("two-cycle lengths must be >= 3");
        add("m=" + std::to_string(m) + ";n=" + std::to_string(n),
            make_two_cycle(m, n));
      }
    }
  } else if (opts.family == "three-cycle-series") {
    const auto [k_lo, k_hi] = ParseRange(opts.k);
    if (k_lo < 2) throw UsageError("three-cycle-series needs k >= 2");
    for (int k = k_lo; k <= k_hi; ++k) {
      add("k=" + std::to_string(k) + ";m=3;n=" + std::to_string(4 * k - 3),
          make_two_cycle(3, 4 * k - 3));
    }
  } else if (opts.family == "degseq-4-2") {
    const auto [lo, hi] = ParseRange(opts.order);
    for (int order = lo; order <= hi; ++order) {
      for (const auto& r : degseq_4_2_realizations(order)) {
        add("order=" + std::to_string(order) + ";" + r.Name(), r.Build());
      }
    }
  } else {
    throw UsageError("unknown sweep family '" + opts.family + "'");
  }

  const SearchConfig config = flags.Config();
  std::vector<SweepRow> rows;
  for (const auto& inst : instances) {
    rows.push_back(sweep_row(opts.family, inst.params, inst.graph, config));
  }
  const std::string csv = sweep_csv(rows, opts.timing);
  if (opts.out_path.empty() || opts.out_path == "-") {
    out << csv;
  } else {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) throw ParseError("cannot write " + opts.out_path);
    file << csv;
    out << "wrote " << rows.size() << " rows to " << opts.out_path << "\n";
  }
  return kExitOk;
}

}  // namespace

Graph graph_from_generator(std::span<const std::string> tokens) {
  std::optional<Graph> result;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= tokens.size(); ++i) {
    if (i == tokens.size() || tokens[i] == "+") {
      Graph term = GeneratorTerm(tokens.subspan(start, i - start));
      result = result ? disjoint_union(*result, term) : std::move(term);
      start = i + 1;
    }
  }
  return *result;
}

SweepRow sweep_row(std::string family, std::string params, const Graph& g,
                   const SearchConfig& config) {
  SweepRow row;
  row.family = std::move(family);
  row.params = std::move(params);
  row.order = g.order();
  row.size = g.size();
  const SearchOutcome outcome = search_sem(g, config);
  row.status = outcome.status;
  row.nodes = outcome.stats.nodes;
  row.millis = outcome.stats.millis;
  if (outcome.obstruction) {
    row.obstruction = std::string(to_string(outcome.obstruction->rule));
  }
  if (g.size() > 0) row.interval = sem_interval(g);
  if (outcome.is_not_sem()) {
    row.valences.emplace();
  } else if (outcome.status == SearchStatus::kSem) {
    const ValenceSet set = sem_set(g, config);
    row.nodes += set.stats.nodes;
    row.millis += set.stats.millis;
    if (!set.partial) row.valences = set.valences;
  }
  return row;
}

std::string sweep_csv(std::span<const SweepRow> rows, bool with_timing) {
  std::ostringstream out;
  out << "family,params,order,size,obstruction,status,interval_lo,"
         "interval_hi,valence_set,nodes";
  if (with_timing) out << ",millis";
  out << "\n";
  for (const SweepRow& row : rows) {
    out << row.family << ',' << row.params << ',' << row.order << ','
        << row.size << ',' << row.obstruction << ',' << to_string(row.status)
        << ',';
    if (row.interval && !row.interval->empty()) {
      out << row.interval->lo << ',' << row.interval->hi;
    } else {
      out << ',';
    }
    out << ',';
    if (row.valences) {
      out << '{';
      for (std::size_t i = 0; i < row.valences->size(); ++i) {
        if (i) out << ';';
        out << (*row.valences)[i];
      }
      out << '}';
    }
    out << ',' << row.nodes;
    if (with_timing) {
      out << ',' << std::fixed << std::setprecision(3) << row.millis;
    }
    out << "\n";
  }
  return out.str();
}

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Super edge-magic labeling toolkit", "semlab"};
  app.require_subcommand(1);

  GraphInput input;
  SolverFlags flags;
  bool json = false;
  std::string cert_path;
  std::string cert_out;
  SweepOptions sweep;

  auto* check = app.add_subcommand("check", "verify a certificate");
  input.Register(check);
  check->add_option("--cert", cert_path, "certificate JSON")->required();

  auto* solve = app.add_subcommand("solve", "decide super edge-magicness");
  input.Register(solve);
  flags.Register(solve, true);
  solve->add_flag("--json", json, "emit the JSON report");
  solve->add_option("--cert-out", cert_out, "write the witness certificate");

  auto* interval = app.add_subcommand("interval", "super edge-magic interval");
  input.Register(interval);
  interval->add_flag("--json", json, "emit JSON");

  auto* valences = app.add_subcommand("valences", "super edge-magic set");
  input.Register(valences);
  flags.Register(valences, false);
  valences->add_flag("--json", json, "emit JSON");

  auto* perfect = app.add_subcommand("perfect", "perfect super edge-magic test");
  input.Register(perfect);
  flags.Register(perfect, false);
  perfect->add_flag("--json", json, "emit JSON");

  auto* sweep_cmd = app.add_subcommand("sweep", "tabulate a graph family");
  sweep_cmd->add_option("family", sweep.family,
                        "two-cycle-grid | three-cycle-series | degseq-4-2")
      ->required();
  sweep_cmd->add_option("--m", sweep.m, "m range for two-cycle-grid");
  sweep_cmd->add_option("--n", sweep.n, "n range for two-cycle-grid");
  sweep_cmd->add_option("--k", sweep.k, "k range for C(3,4k-3)");
  sweep_cmd->add_option("--order", sweep.order, "order range for degseq-4-2");
  sweep_cmd->add_option("--out", sweep.out_path, "CSV path (default stdout)");
  sweep_cmd->add_option("--max-order", sweep.max_order,
                        "refuse instances above this order");
  sweep_cmd->add_flag("--timing", sweep.timing, "append a millis column");
  flags.Register(sweep_cmd, true);

  auto* render = app.add_subcommand("render", "emit Graphviz DOT");
  input.Register(render);
  render->add_option("--cert", cert_path, "certificate JSON to annotate with");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return RunCheck(input, cert_path, out, err);
    if (render->parsed()) return RunRender(input, cert_path, out, err);
    if (sweep_cmd->parsed()) return RunSweep(sweep, flags, out);
    const Graph g = input.Load();
    if (solve->parsed()) return RunSolve(g, flags, json, cert_out, out);
    if (interval->parsed()) return RunReport(Report::kInterval, g, flags, json, out);
    if (valences->parsed()) return RunReport(Report::kValences, g, flags, json, out);
    if (perfect->parsed()) return RunReport(Report::kPerfect, g, flags, json, out);
  } catch (const ParseError& e) {
    err << "parse: " << e.what() << "\n";
    return kExitInputError;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace semlab::cli
