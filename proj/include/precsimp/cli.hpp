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

#ifndef PRECSIMP_CLI_HPP_
#define PRECSIMP_CLI_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "precsimp/decomposition.hpp"
#include "precsimp/graph.hpp"

namespace precsimp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // parse errors and bad invocations
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitNotEquivalent = 3;
inline constexpr int kExitLimit = 4;

enum class Command { kInfo, kRedundant, kSimplify, kReduce, kCondense, kCheck };

struct RunConfig {
  Command command = Command::kInfo;
  std::vector<std::filesystem::path> inputs;  // two for kCheck, else one
  std::optional<std::filesystem::path> output;
  std::size_t exact_limit = 20;
  bool allow_heuristic = false;
  RepresentativePolicy representative = RepresentativePolicy::kSmallest;
  bool oracle = false;        // redundant: exhaustive fallback
  bool of_reduction = false;  // condense: condense the reduction instead
};

struct AnalysisSummary {
  int n = 0;
  std::size_t m = 0;
  bool feasible = false;
  std::size_t class_count = 0;
  std::vector<std::size_t> class_sizes;
  std::size_t removable_intra = 0;  // total strictly-loose intra-class edges
  bool zero_weight_cycle = false;
  std::size_t condensation_edges = 0;
  std::size_t condensation_redundant = 0;
  std::size_t removed = 0;  // size of the computed maximum redundant set
  bool certified = false;
};

// Throws Error(kExactLimitExceeded) when cfg forbids the greedy fallback
// and a class is too large. Infeasible graphs yield feasible == false.
AnalysisSummary summarize(const PrecedenceGraph& g, const SolverConfig& cfg);
std::string format_summary(const AnalysisSummary& s);

// Executes one command. Results go to out (or config.output), diagnostics
// to err. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and runs it.
int main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace precsimp::cli

#endif  // PRECSIMP_CLI_HPP_
