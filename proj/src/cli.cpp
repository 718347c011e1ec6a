// Copyright 2026 The precsimp Authors
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

#include "precsimp/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "precsimp/dcs_io.hpp"
#include "precsimp/distance.hpp"
#include "precsimp/error.hpp"
#include "precsimp/redundancy.hpp"
#include "precsimp/reduction.hpp"
#include "precsimp/verify.hpp"

namespace precsimp::cli {

namespace {

SolverConfig solver_config(const RunConfig& config) {
  SolverConfig cfg;
  cfg.exact_limit = config.exact_limit;
  cfg.allow_heuristic = config.allow_heuristic;
  cfg.representative = config.representative;
  return cfg;
}

PrecedenceGraph load(const std::filesystem::path& path, std::ostream& err) {
  Normalized parsed = read_dcs_file(path);
  for (const RawEdge& r : parsed.dropped_self_loops) {
    err << "warning: " << path.string() << ": dropped self-loop on node "
        << r.from << " with weight " << r.weight << '\n';
  }
  return std::move(parsed.graph);
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (!config.output) {
    out << text;
    return;
  }
  std::ofstream file(*config.output, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kParseError,
                "cannot write " + config.output->string());
  }
  file << text;
}

std::vector<std::string> class_comments(const Partition& p) {
  std::vector<std::string> lines;
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::ostringstream os;
    os << "class " << k + 1 << " rep " << p.rep[k] << " members";
    for (Node v : p.classes[k]) os << ' ' << v;
    lines.push_back(os.str());
  }
  return lines;
}

int run_info(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PrecedenceGraph g = load(config.inputs.at(0), err);
  AnalysisSummary s = summarize(g, solver_config(config));
  emit(config, format_summary(s), out);
  if (!s.feasible) {
    err << "error: negative cycle found; the system is infeasible\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

int run_redundant(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PrecedenceGraph g = load(config.inputs.at(0), err);
  DistanceMatrix d = min_walk_weights(g);
  EdgeSet redundant;
  if (!has_zero_weight_cycle(d)) {
    redundant = find_redundant_edges(g, d);
  } else if (config.oracle) {
    redundant = brute_force_redundant_edges(g);
  } else {
    err << "error: the system has a zero-weight cycle; the shortest-path "
           "criterion does not apply. Rerun with --oracle.\n";
    return kExitUsage;
  }
  std::ostringstream os;
  for (const Edge& e : redundant) {
    os << e.from << ' ' << e.to << ' ' << g.weight(e) << '\n';
  }
  emit(config, os.str(), out);
  err << redundant.size() << " redundant edges\n";
  return kExitOk;
}

int run_simplify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PrecedenceGraph g = load(config.inputs.at(0), err);
  RedundantEdgeSet r = max_redundant_edge_set(g, solver_config(config));
  emit(config, serialize_dcs(g.without(r.edges)), out);
  err << "removed " << r.edges.size() << ", "
      << (r.certified ? "certified" : "maximal") << '\n';
  return kExitOk;
}

int run_reduce(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PrecedenceGraph g = load(config.inputs.at(0), err);
  ReductionResult r = equivalent_reduction(g, config.representative);
  emit(config, serialize_dcs(r.reduced), out);
  err << "reduced " << g.size() << " edges to " << r.reduced.size() << '\n';
  return kExitOk;
}

int run_condense(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PrecedenceGraph g = load(config.inputs.at(0), err);
  Decomposition dec = decompose(g, config.representative);
  Condensation cond = dec.condensed;
  if (config.of_reduction) {
    cond = er_condensation(equivalent_reduction(g, dec), dec.distances);
  }
  emit(config, serialize_dcs(cond.class_graph(), class_comments(dec.partition)),
       out);
  return kExitOk;
}

int run_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PrecedenceGraph a = load(config.inputs.at(0), err);
  PrecedenceGraph b = load(config.inputs.at(1), err);
  EquivalenceReport report = systems_equivalent(a, b);
  if (report.equivalent) {
    out << "equivalent\n";
    return kExitOk;
  }
  const EquivalenceWitness& w = *report.witness;
  const PrecedenceGraph& owner = w.side == Side::kA ? a : b;
  out << "not equivalent: constraint x" << w.edge.from << " - x" << w.edge.to
      << " <= " << owner.weight(w.edge) << " (edge " << w.edge << " of "
      << (w.side == Side::kA ? "A" : "B") << ") is not implied by "
      << (w.side == Side::kA ? "B" : "A") << '\n';
  return kExitNotEquivalent;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasibleSystem:
    case ErrorCode::kNegativeSelfLoop:
      return kExitInfeasible;
    case ErrorCode::kExactLimitExceeded:
    case ErrorCode::kLimitExceeded:
      return kExitLimit;
    default:
      return kExitUsage;
  }
}

void add_common_options(CLI::App* sub, RunConfig& config, bool writes_file) {
  if (writes_file) {
    sub->add_option("--out,-o", config.output, "Write the result here instead of stdout");
  }
  sub->add_option("--exact-limit", config.exact_limit,
                  "Largest tight intra-class edge set solved exactly")
      ->capture_default_str();
  sub->add_flag("--allow-heuristic", config.allow_heuristic,
                "Solve classes above --exact-limit greedily instead of failing");
  sub->add_option("--representative", config.representative,
                  "Representative node of each class")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, RepresentativePolicy>{
              {"smallest", RepresentativePolicy::kSmallest},
              {"largest", RepresentativePolicy::kLargest}},
          CLI::ignore_case));
}

}  // namespace

AnalysisSummary summarize(const PrecedenceGraph& g, const SolverConfig& cfg) {
  AnalysisSummary s;
  s.n = g.n();
  s.m = g.size();
  if (!analyze_distances(g).feasible()) return s;
  s.feasible = true;
  Decomposition dec = decompose(g, cfg.representative);
  s.class_count = dec.partition.size();
  for (const auto& members : dec.partition.classes) {
    s.class_sizes.push_back(members.size());
    if (members.size() > 1) s.zero_weight_cycle = true;
  }
  for (const ClassEdges& block : dec.edges.intra) {
    s.removable_intra += block.removable.size();
  }
  s.condensation_edges = dec.condensed.edges.size();
  s.condensation_redundant = dec.condensation_mres.size();
  RedundantEdgeSet r = max_redundant_edge_set(dec, cfg);
  s.removed = r.edges.size();
  s.certified = r.certified;
  return s;
}

std::string format_summary(const AnalysisSummary& s) {
  std::ostringstream os;
  os << "nodes: " << s.n << '\n';
  os << "edges: " << s.m << '\n';
  os << "feasible: " << (s.feasible ? "yes" : "no") << '\n';
  if (!s.feasible) return os.str();
  os << "classes: " << s.class_count << '\n';
  os << "class sizes:";
  for (std::size_t size : s.class_sizes) os << ' ' << size;
  os << '\n';
  os << "zero-weight cycle: " << (s.zero_weight_cycle ? "yes" : "no") << '\n';
  os << "loose intra-class edges: " << s.removable_intra << '\n';
  os << "condensation edges: " << s.condensation_edges << '\n';
  os << "condensation redundant edges: " << s.condensation_redundant << '\n';
  os << "removable edges: " << s.removed << '\n';
  os << "certified: " << (s.certified ? "yes" : "no") << '\n';
  return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kInfo: return run_info(config, out, err);
      case Command::kRedundant: return run_redundant(config, out, err);
      case Command::kSimplify: return run_simplify(config, out, err);
      case Command::kReduce: return run_reduce(config, out, err);
      case Command::kCondense: return run_condense(config, out, err);
      case Command::kCheck: return run_check(config, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

int main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Simplify systems of difference constraints x_i - x_j <= c"};
  app.require_subcommand(1);
  RunConfig config;
  std::filesystem::path input;
  std::filesystem::path second;

  CLI::App* info = app.add_subcommand(
      "info", "Summarise tight classes, condensation and removable edges");
  info->add_option("input", input, "System file")->required();
  add_common_options(info, config, true);

  CLI::App* redundant = app.add_subcommand(
      "redundant", "List every edge that is individually redundant");
  redundant->add_option("input", input, "System file")->required();
  redundant->add_flag("--oracle", config.oracle,
                      "Use the exhaustive check when zero-weight cycles exist");
  add_common_options(redundant, config, true);

  CLI::App* simplify = app.add_subcommand(
      "simplify",
      "Remove a maximum set of redundant constraints. The output is a subset "
      "of the input with unchanged weights");
  simplify->add_option("input", input, "System file")->required();
  add_common_options(simplify, config, true);

  CLI::App* reduce = app.add_subcommand(
      "reduce",
      "Write a minimum-size equivalent system. The output may contain "
      "constraints that are not in the input");
  reduce->add_option("input", input, "System file")->required();
  add_common_options(reduce, config, true);

  CLI::App* condense = app.add_subcommand(
      "condense",
      "Write the system over one representative variable per tight class, "
      "renumbered to 1..K");
  condense->add_option("input", input, "System file")->required();
  condense->add_flag("--of-reduction", config.of_reduction,
                     "Condense the equivalent reduction instead of the input");
  add_common_options(condense, config, true);

  CLI::App* check = app.add_subcommand(
      "check", "Exit 0 if two systems have the same solutions, 3 otherwise");
  check->add_option("a", input, "First system file")->required();
  check->add_option("b", second, "Second system file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::map<CLI::App*, Command> commands = {
      {info, Command::kInfo},         {redundant, Command::kRedundant},
      {simplify, Command::kSimplify}, {reduce, Command::kReduce},
      {condense, Command::kCondense}, {check, Command::kCheck}};
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }
  config.inputs.push_back(input);
  if (config.command == Command::kCheck) config.inputs.push_back(second);
  return run(config, out, err);
}

}  // namespace precsimp::cli
